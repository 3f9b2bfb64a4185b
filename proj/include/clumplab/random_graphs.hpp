#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "clumplab/clump_graph.hpp"

namespace clumplab {

struct RandomLayeredOptions {
  std::size_t k = 3;
  std::size_t max_depth = 12;
  unsigned max_weight = 6;
};

// Rooted k-colored layered clump graph with depth in [1, max_depth] and weights in
// [1, max_weight]; each clump color is drawn so the layering stays valid.
WeightedClumpGraph random_layered_graph(std::mt19937_64& rng, const RandomLayeredOptions& options);

// random_layered_graph, blown up and re-layered from a vertex of maximum eccentricity,
// so depth equals the diameter of the blow-up.
WeightedClumpGraph random_corpus_graph(std::mt19937_64& rng, const RandomLayeredOptions& options);

std::vector<WeightedClumpGraph> random_corpus(std::uint64_t seed, std::size_t count,
                                              const RandomLayeredOptions& options = {});

}  // namespace clumplab

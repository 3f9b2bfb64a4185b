#pragma once

#include <cstddef>
#include <vector>

#include "clumplab/clump_graph.hpp"

namespace clumplab {

// Assigns the least color absent from the previous layer to each clump in turn.
// `weights[i]` lists the clump weights of layer i; zero weights are dropped first.
WeightedClumpGraph greedy_colored_graph(std::size_t k, const std::vector<std::vector<Integer>>& weights,
                                        bool rooted = true);

// Weight lists of one block, before zero-weight clumps are removed.
std::vector<std::vector<Integer>> counterexample_block_weights(std::size_t s, const Integer& delta);

WeightedClumpGraph counterexample_block(std::size_t s, const Integer& delta);
WeightedClumpGraph counterexample_graph(std::size_t s, const Integer& delta, std::size_t p);

// Closed forms for the block and the juxtaposed graph.
Integer counterexample_block_total(std::size_t s, const Integer& delta);
Integer counterexample_order(std::size_t s, const Integer& delta, std::size_t p);
std::size_t counterexample_depth(std::size_t s, std::size_t p);

WeightedClumpGraph eppt_odd(std::size_t r, const Integer& delta, std::size_t depth);

struct EpptEvenResult {
  WeightedClumpGraph graph;
  Integer min_weighted_degree;
  Rational phi;
};
EpptEvenResult eppt_even(std::size_t r, const Integer& delta, std::size_t depth);

// (6r-5)δ/((2r-1)δ+2r-3) - 2(r-1)(3r+2)/(2r²-1)
Rational coefficient_gap(std::size_t r, const Integer& delta);
// The same quantity in factored form: (1-T/δ) / ((2r²-1)(2r-1)(1+(2r-3)/((2r-1)δ))).
Rational coefficient_gap_factored(std::size_t r, const Integer& delta);
// T = 12r³-22r²-2r+12.
Integer coefficient_gap_threshold(std::size_t r);

// Dδ/n for a graph of depth D and order n.
Rational normalized_diameter(std::size_t depth, const Integer& delta, const Integer& n);

}  // namespace clumplab

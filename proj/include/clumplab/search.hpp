#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "clumplab/clump_graph.hpp"

namespace clumplab {

using PatternSequence = std::vector<ColorSet>;

// Color-set sequences of depth `depth` starting from {0} whose consecutive pairs are
// admissible three-color patterns and which satisfy the first three canonical
// properties. One representative per relabeling of colors 1 and 2.
std::vector<PatternSequence> canonical_pattern_sequences(std::size_t depth);

// Clump graph with one weight-1 clump per color of every layer.
WeightedClumpGraph pattern_topology(const PatternSequence& pattern);

struct FrontierEntry {
  std::size_t depth = 0;
  Integer min_order;
  PatternSequence pattern;
  WeightedClumpGraph witness;
  Rational phi;
};

struct SearchResult {
  std::map<std::size_t, FrontierEntry> frontier;  // keyed by diameter
  Rational best_phi;
  std::size_t topologies = 0;
  bool budget_exceeded = false;
};

// Solves the minimum-order program on every canonical sequence of depth 1..max_depth
// and keeps, per diameter, the smallest witness whose blow-up has that diameter.
// Stops after `budget` topologies. Throws std::invalid_argument unless k == 3.
SearchResult extremal_search(std::size_t k, const Integer& delta, std::size_t max_depth,
                             std::size_t budget, std::size_t threads = 1);

}  // namespace clumplab

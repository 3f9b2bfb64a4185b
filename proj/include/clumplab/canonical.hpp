#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clumplab/clump_graph.hpp"

namespace clumplab {

enum class Rule {
  color_switch,
  move_x_clump,
  fold_y_back,
  trade_x_for_y,
  collapse_to_x,
  fold_z_back,
  recolor_duplicate,
};
std::string_view rule_name(Rule rule);

struct ColorSwap {
  ColorId a;
  ColorId b;
  std::size_t first_layer = 0;
  std::size_t last_layer = 0;
};

struct TransformEntry {
  Rule rule = Rule::color_switch;
  std::size_t layer = 0;
  // Snapshot of layers window_first .. window_first + before.size() - 1.
  std::size_t window_first = 0;
  std::vector<LayerSpec> before;
  std::vector<LayerSpec> after;
  std::optional<ColorSwap> swap;
};

struct TransformLog {
  std::vector<TransformEntry> entries;
  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
};

struct Violation {
  std::size_t layer = 0;
  int property = 0;  // canonical property (i)..(iv) as 1..4
  bool operator==(const Violation&) const = default;
};

struct CanonicalReport {
  // flags[i][p] is true when property p+1 holds at layer i.
  std::vector<std::array<bool, 4>> flags;
  std::vector<Violation> violations;
  bool patterns_checked = false;
  // Index i of every pair (L_i, L_{i+1}) outside the seven k = 3 patterns.
  std::vector<std::size_t> pattern_failures;
  bool min_degree_ok = true;

  bool canonical() const { return violations.empty() && pattern_failures.empty(); }
};

CanonicalReport check_canonical(const WeightedClumpGraph& h, const Integer& delta);

// Name of the color-set pair with colors renamed to X, Y, Z, e.g. "XY|XZ".
std::string pattern_name(ColorSet a, ColorSet b);
bool is_three_color_pattern(ColorSet a, ColorSet b);

class CanonicalizationError : public std::runtime_error {
 public:
  CanonicalizationError(const std::string& what, TransformLog log)
      : std::runtime_error(what), log_(std::move(log)) {}
  const TransformLog& log() const { return log_; }

 private:
  TransformLog log_;
};

struct CanonicalResult {
  WeightedClumpGraph graph;
  TransformLog log;
};

std::size_t canonicalize_cap(const WeightedClumpGraph& h);
CanonicalResult canonicalize(const WeightedClumpGraph& h, const Integer& delta);

// Clears the (iii) violation at layer i (c(i) = k, c(i+1) = 1). For k > 3 only the
// two preliminary moves are available; otherwise CanonicalizationError is thrown.
CanonicalResult resolve_k1_violation(const WeightedClumpGraph& h, std::size_t i,
                                     const Integer& delta);

// Re-layers a colored simple graph by BFS distance from `root`, or from the first
// vertex of maximum eccentricity when no root is given.
WeightedClumpGraph bfs_relayer(const SimpleGraph& g, const std::vector<ColorId>& coloring,
                               std::size_t k, std::optional<std::size_t> root = std::nullopt);

}  // namespace clumplab

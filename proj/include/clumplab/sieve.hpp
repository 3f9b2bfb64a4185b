#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "clumplab/clump_graph.hpp"

namespace clumplab {

enum class WindowKind { one_layer, two_layer, three_layer };

struct WindowResult {
  WindowKind kind = WindowKind::one_layer;
  std::size_t index = 0;
  std::string case_id;  // e.g. "1L-1", "2L-4", "3L-1.2"
  Rational lhs;
  Rational rhs;
  bool pass = false;
  Rational slack() const { return lhs - rhs; }
};

struct AggregateResult {
  std::string name;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct SieveReport {
  std::vector<WindowResult> windows;
  AggregateResult pair_sum;
  AggregateResult triple_sum;
  Rational slack_c;

  std::size_t windows_passed() const;
  bool all_windows_pass() const { return windows_passed() == windows.size(); }
};

inline const Rational kDefaultSlack{12};

// Requires a three-color profile whose consecutive color sets follow the seven
// admissible patterns; throws std::invalid_argument otherwise.
SieveReport window_inequalities(const LayerProfile& profile, const Integer& delta,
                                const Rational& slack_c = kDefaultSlack);

struct GlobalStats {
  Rational mu;
  Rational alpha1;
  Rational alpha2;
  Rational phi;
  Rational psi;
  std::size_t s = 0;
  std::vector<std::size_t> singles;
  Integer n;
  std::size_t depth = 0;
  Integer delta;
  // Two-clump layers flanked by singles, their neighbors, and the rest.
  std::size_t d_layers = 0;
  std::size_t e_layers = 0;
  std::size_t f_layers = 0;
};

GlobalStats global_stats(const LayerProfile& profile, const Integer& delta);

struct ConstraintCheck {
  std::string name;
  Rational lhs;
  Rational rhs;  // including the slack allowance
  bool pass = false;
};

// Each constraint as LHS <= RHS + slack_c·δ/n.
std::vector<ConstraintCheck> check_aggregates(const GlobalStats& stats, const Rational& slack_c,
                                              const Integer& delta, const Integer& n);

// |D|+|E| <= 3s and |F| <= 3(1-α₁)n/δ + slack_c; reported, not relied on.
std::vector<ConstraintCheck> partition_checks(const GlobalStats& stats, const Rational& slack_c);

// True when no layer strictly between 0 and D is a single.
bool no_interior_singles(const LayerProfile& profile);
// Dδ/n <= 7/3 + slack_c·δ/n.
ConstraintCheck no_singles_bound(const GlobalStats& stats, const Rational& slack_c);

// ℓ_i <- min(ℓ_i, cap) on every layer.
LayerProfile cap_layer_weights(const LayerProfile& profile, const Integer& cap);

}  // namespace clumplab

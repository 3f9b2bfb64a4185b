#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clumplab/clump_graph.hpp"
#include "clumplab/simplex.hpp"

namespace clumplab {

using RationalLP = LinearProgram<Rational>;
using LPSolution = LPResult<Rational>;
using RationalVector = DenseVector<Rational>;
using RationalMatrix = DenseMatrix<Rational>;

LPSolution simplex_solve_rational(const RationalLP& lp);

// Variables in order (φ, μ, ψ, α₁, α₂), all >= 0; maximize φ.
RationalLP build_epsz_lp();
// Row indices (0-based) whose constraint holds with equality at x.
std::vector<std::size_t> tight_rows(const RationalLP& lp, const RationalVector& x);
// True when x meets every row and lower bound of lp exactly.
bool satisfies(const RationalLP& lp, const RationalVector& x);

struct PerturbationBound {
  // Vertices of {y >= 0 : Aᵀy >= c} for a max program with <= rows.
  std::vector<RationalVector> dual_vertices;
  Rational max_l1;
  // Half-width of the interval guaranteed to contain the optimum when |h_j| <= eps.
  Rational radius(const Rational& eps) const { return max_l1 * eps; }
};
// Requires a maximization program with only <= rows and nonnegative variables.
PerturbationBound perturbation_bound(const RationalLP& lp);
RationalLP perturbed(const RationalLP& lp, const RationalVector& h);

inline constexpr std::size_t kMaxBranchClumps = 40;

struct MinOrderResult {
  LPStatus status = LPStatus::infeasible;
  Rational lp_value;
  std::vector<Rational> lp_weights;
  // Present when the topology has at most kMaxBranchClumps clumps and the search finished.
  std::optional<Integer> int_value;
  std::vector<Integer> int_weights;
  std::size_t nodes = 0;
};

// Minimizes total weight with w >= 1 and every clump's neighbor weight >= δ. Weights
// of `topology` are ignored. An optional feasible incumbent seeds branch-and-bound.
// Throws std::invalid_argument on a disconnected topology or δ < 1.
MinOrderResult min_order_lp(const WeightedClumpGraph& topology, const Integer& delta,
                            const std::optional<std::vector<Integer>>& incumbent = std::nullopt,
                            std::size_t node_limit = 200000);

// Same topology with clump weights replaced.
WeightedClumpGraph with_weights(const WeightedClumpGraph& topology, const std::vector<Integer>& weights);

}  // namespace clumplab

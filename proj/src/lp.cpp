#include "clumplab/lp.hpp"

#include <stdexcept>

namespace clumplab {

namespace {

bool clumps_connected(const WeightedClumpGraph& h) {
  std::vector<bool> seen(h.size(), false);
  std::vector<ClumpId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const ClumpId v = stack.back();
    stack.pop_back();
    for (ClumpId u : h.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == h.size();
}

struct Node {
  std::vector<Integer> lo;
  std::vector<std::optional<Integer>> hi;
};

RationalLP node_program(const WeightedClumpGraph& h, const Integer& delta, const Node& node) {
  const Eigen::Index n = static_cast<Eigen::Index>(h.size());
  Eigen::Index caps = 0;
  for (const auto& b : node.hi) caps += b ? 1 : 0;
  RationalLP lp;
  lp.direction = Direction::minimize;
  lp.objective = RationalVector::Constant(n, Rational(1));
  lp.matrix = RationalMatrix::Zero(n + caps, n);
  lp.rhs = RationalVector::Zero(n + caps);
  for (Eigen::Index y = 0; y < n; ++y) {
    for (ClumpId x : h.neighbors(static_cast<ClumpId>(y))) lp.matrix(y, static_cast<Eigen::Index>(x)) = 1;
    lp.rhs(y) = Rational(delta);
    lp.senses.push_back(Sense::greater_equal);
  }
  Eigen::Index row = n;
  for (Eigen::Index x = 0; x < n; ++x) {
    const auto& b = node.hi[static_cast<std::size_t>(x)];
    if (!b) continue;
    lp.matrix(row, x) = 1;
    lp.rhs(row) = Rational(*b);
    lp.senses.push_back(Sense::less_equal);
    ++row;
  }
  for (const Integer& l : node.lo) lp.lower.emplace_back(Rational(l));
  return lp;
}

bool feasible_weights(const WeightedClumpGraph& h, const Integer& delta, const std::vector<Integer>& w) {
  if (w.size() != h.size()) return false;
  for (ClumpId x = 0; x < h.size(); ++x) {
    if (w[x] < 1) return false;
  }
  if (h.rooted() && w[0] != 1) return false;
  for (ClumpId y = 0; y < h.size(); ++y) {
    Integer sum = 0;
    for (ClumpId x : h.neighbors(y)) sum += w[x];
    if (sum < delta) return false;
  }
  return true;
}

}  // namespace

LPSolution simplex_solve_rational(const RationalLP& lp) { return simplex_solve<Rational>(lp); }

RationalLP build_epsz_lp() {
  RationalLP lp;
  lp.direction = Direction::maximize;
  lp.objective = RationalVector::Zero(5);
  lp.objective(0) = 1;
  lp.matrix = RationalMatrix::Zero(5, 5);
  // Columns: φ, μ, ψ, α₁, α₂.
  const long long rows[5][5] = {
      {0, 1, 0, 1, 1},
      {0, 0, 3, 0, 0},
      {12, 4, 0, -2, -1},
      {3, 0, 1, -1, -1},
      {1, 0, -3, 3, 0},
  };
  const long long rhs[5] = {1, 2, 28, 7, 3};
  lp.rhs = RationalVector::Zero(5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) lp.matrix(i, j) = Rational(rows[i][j]);
    lp.rhs(i) = Rational(rhs[i]);
    lp.senses.push_back(Sense::less_equal);
    lp.lower.emplace_back(Rational(0));
  }
  return lp;
}

std::vector<std::size_t> tight_rows(const RationalLP& lp, const RationalVector& x) {
  const RationalVector ax = lp.matrix * x;
  std::vector<std::size_t> out;
  for (Eigen::Index i = 0; i < ax.size(); ++i) {
    if (ax(i) == lp.rhs(i)) out.push_back(static_cast<std::size_t>(i));
  }
  return out;
}

bool satisfies(const RationalLP& lp, const RationalVector& x) {
  lp.validate();
  if (x.size() != lp.variables()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const auto& lo = lp.lower[static_cast<std::size_t>(j)];
    if (lo && x(j) < *lo) return false;
  }
  const RationalVector ax = lp.matrix * x;
  for (Eigen::Index i = 0; i < ax.size(); ++i) {
    switch (lp.senses[static_cast<std::size_t>(i)]) {
      case Sense::less_equal:
        if (ax(i) > lp.rhs(i)) return false;
        break;
      case Sense::greater_equal:
        if (ax(i) < lp.rhs(i)) return false;
        break;
      case Sense::equal:
        if (ax(i) != lp.rhs(i)) return false;
        break;
    }
  }
  return true;
}

PerturbationBound perturbation_bound(const RationalLP& lp) {
  lp.validate();
  if (lp.direction != Direction::maximize) throw std::invalid_argument("perturbation_bound needs a maximization");
  for (std::size_t i = 0; i < lp.senses.size(); ++i) {
    if (lp.senses[i] != Sense::less_equal) throw std::invalid_argument("perturbation_bound needs <= rows");
  }
  for (const auto& lo : lp.lower) {
    if (!lo || *lo != 0) throw std::invalid_argument("perturbation_bound needs x >= 0");
  }
  const Eigen::Index m = lp.constraints(), n = lp.variables();
  RationalMatrix g(n + m, m);
  RationalVector h(n + m);
  g.topRows(n) = lp.matrix.transpose();
  h.head(n) = lp.objective;
  g.bottomRows(m) = RationalMatrix::Identity(m, m);
  h.tail(m) = RationalVector::Zero(m);
  PerturbationBound out;
  out.dual_vertices = enumerate_vertices<Rational>(g, h);
  out.max_l1 = 0;
  for (const RationalVector& v : out.dual_vertices) {
    Rational l1 = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) l1 += abs(v(i));
    if (l1 > out.max_l1) out.max_l1 = l1;
  }
  return out;
}

RationalLP perturbed(const RationalLP& lp, const RationalVector& h) {
  if (h.size() != lp.constraints()) throw std::invalid_argument("perturbation length mismatch");
  RationalLP out = lp;
  out.rhs += h;
  return out;
}

WeightedClumpGraph with_weights(const WeightedClumpGraph& topology, const std::vector<Integer>& weights) {
  if (weights.size() != topology.size()) throw std::invalid_argument("weight count differs from clump count");
  std::vector<LayerSpec> layers = topology.layer_specs();
  std::size_t id = 0;
  for (LayerSpec& layer : layers) {
    for (LayerEntry& e : layer) e.weight = weights[id++];
  }
  return make_clump_graph(topology.k(), std::move(layers), topology.rooted());
}

MinOrderResult min_order_lp(const WeightedClumpGraph& topology, const Integer& delta,
                            const std::optional<std::vector<Integer>>& incumbent, std::size_t node_limit) {
  if (delta < 1) throw std::invalid_argument("min_order_lp needs delta >= 1");
  if (!clumps_connected(topology)) throw std::invalid_argument("min_order_lp needs a connected topology");
  const std::size_t n = topology.size();
  Node root{std::vector<Integer>(n, Integer(1)), std::vector<std::optional<Integer>>(n)};
  if (topology.rooted()) root.hi[0] = Integer(1);

  MinOrderResult result;
  const LPSolution relax = simplex_solve_rational(node_program(topology, delta, root));
  result.status = relax.status;
  result.nodes = 1;
  if (relax.status != LPStatus::optimal) return result;
  result.lp_value = relax.value;
  for (Eigen::Index j = 0; j < relax.x.size(); ++j) result.lp_weights.push_back(relax.x(j));
  if (n > kMaxBranchClumps) return result;

  std::optional<Integer> best;
  std::vector<Integer> best_w;
  auto offer = [&](std::vector<Integer> w) {
    Integer total = 0;
    for (const Integer& x : w) total += x;
    if (!best || total < *best) {
      best = total;
      best_w = std::move(w);
    }
  };
  if (incumbent && feasible_weights(topology, delta, *incumbent)) offer(*incumbent);

  std::vector<std::pair<Node, LPSolution>> stack;
  stack.emplace_back(root, relax);
  bool finished = true;
  while (!stack.empty()) {
    auto [node, sol] = std::move(stack.back());
    stack.pop_back();
    if (sol.status != LPStatus::optimal) continue;
    if (best && ceil_of(sol.value) >= *best) continue;
    std::vector<Integer> rounded;
    Eigen::Index branch = -1;
    Rational best_frac = 0;
    for (Eigen::Index j = 0; j < sol.x.size(); ++j) {
      rounded.push_back(ceil_of(sol.x(j)));
      const Rational f = sol.x(j) - Rational(floor_of(sol.x(j)));
      const Rational dist = f < Rational(1, 2) ? f : 1 - f;
      if (f != 0 && dist > best_frac) {
        best_frac = dist;
        branch = j;
      }
    }
    offer(rounded);
    if (branch < 0) continue;
    if (result.nodes >= node_limit) {
      finished = false;
      break;
    }
    const std::size_t b = static_cast<std::size_t>(branch);
    Node up = node, down = node;
    up.lo[b] = ceil_of(sol.x(branch));
    down.hi[b] = floor_of(sol.x(branch));
    const bool down_ok = down.hi[b] >= down.lo[b];
    // Depth-first: the rounded-down child is pushed last so it is explored first.
    stack.emplace_back(up, simplex_solve_rational(node_program(topology, delta, up)));
    ++result.nodes;
    if (down_ok) {
      stack.emplace_back(down, simplex_solve_rational(node_program(topology, delta, down)));
      ++result.nodes;
    }
  }
  if (finished && best) {
    result.int_value = best;
    result.int_weights = best_w;
  }
  return result;
}

}  // namespace clumplab

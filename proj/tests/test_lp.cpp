#include <random>

#include <gtest/gtest.h>

#include "clumplab/constructions.hpp"
#include "clumplab/lp.hpp"
#include "clumplab/random_graphs.hpp"
#include "oracles.hpp"

using namespace clumplab;

namespace {

RationalLP make_lp(Direction dir, std::vector<long long> c, std::vector<std::vector<long long>> a,
                   std::vector<Sense> senses, std::vector<long long> b) {
  RationalLP lp;
  lp.direction = dir;
  const Eigen::Index n = static_cast<Eigen::Index>(c.size()), m = static_cast<Eigen::Index>(b.size());
  lp.objective.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) lp.objective(j) = Rational(c[static_cast<std::size_t>(j)]);
  lp.matrix.resize(m, n);
  lp.rhs.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) lp.matrix(i, j) = Rational(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    lp.rhs(i) = Rational(b[static_cast<std::size_t>(i)]);
  }
  lp.senses = std::move(senses);
  lp.lower.assign(c.size(), Rational(0));
  return lp;
}

}  // namespace

TEST(Simplex, TrivialPrograms) {
  const auto one = simplex_solve_rational(make_lp(Direction::maximize, {1}, {{1}}, {Sense::less_equal}, {1}));
  ASSERT_EQ(one.status, LPStatus::optimal);
  EXPECT_EQ(one.value, 1);

  const auto two = simplex_solve_rational(make_lp(Direction::maximize, {1, 1}, {{1, 1}}, {Sense::less_equal}, {1}));
  ASSERT_EQ(two.status, LPStatus::optimal);
  EXPECT_EQ(two.value, 1);
  EXPECT_EQ(two.dual_value, 1);
  EXPECT_EQ(two.y(0), 1);
}

TEST(Simplex, StatusesAreReported) {
  EXPECT_EQ(simplex_solve_rational(make_lp(Direction::maximize, {1}, {{1}}, {Sense::greater_equal}, {1})).status,
            LPStatus::unbounded);
  EXPECT_EQ(simplex_solve_rational(make_lp(Direction::maximize, {1}, {{1}, {1}}, {Sense::less_equal, Sense::greater_equal},
                                           {1, 2}))
                .status,
            LPStatus::infeasible);
}

TEST(Simplex, FreeVariablesAndEqualities) {
  RationalLP lp = make_lp(Direction::minimize, {1, 2}, {{1, 0}, {1, 1}}, {Sense::greater_equal, Sense::equal}, {-3, 4});
  lp.lower[0] = std::nullopt;
  const auto sol = simplex_solve_rational(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  // x0 + x1 = 4 with x1 >= 0 and cost 1, 2: push everything onto x0.
  EXPECT_EQ(sol.value, 4);
  EXPECT_EQ(sol.x(0), 4);
  EXPECT_EQ(sol.value, sol.dual_value);
}

TEST(Simplex, RedundantEqualityRows) {
  const auto sol = simplex_solve_rational(
      make_lp(Direction::maximize, {1, 1}, {{1, 1}, {2, 2}, {1, 0}}, {Sense::equal, Sense::equal, Sense::less_equal}, {3, 6, 2}));
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, 3);
  EXPECT_EQ(sol.dual_value, 3);
}

TEST(Simplex, AgreesWithVertexEnumeration) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(-3, 12), nvar(1, 4), ncon(1, 4), sense(0, 2);
  int optimal = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = nvar(rng), m = ncon(rng);
    std::vector<long long> c(static_cast<std::size_t>(n));
    for (auto& x : c) x = coef(rng);
    std::vector<std::vector<long long>> a;
    std::vector<long long> b;
    std::vector<Sense> senses;
    std::vector<oracle::OracleRow> rows;
    for (int i = 0; i < m; ++i) {
      std::vector<long long> row(static_cast<std::size_t>(n));
      for (auto& x : row) x = coef(rng);
      const int s = sense(rng);
      a.push_back(row);
      b.push_back(rhs(rng));
      senses.push_back(s == 0 ? Sense::less_equal : (s == 1 ? Sense::greater_equal : Sense::equal));
    }
    for (int j = 0; j < n; ++j) {
      std::vector<long long> row(static_cast<std::size_t>(n), 0);
      row[static_cast<std::size_t>(j)] = 1;
      a.push_back(row);
      b.push_back(5);
      senses.push_back(Sense::less_equal);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      oracle::OracleRow r;
      for (long long x : a[i]) r.a.emplace_back(x);
      r.sense = senses[i] == Sense::less_equal ? -1 : (senses[i] == Sense::greater_equal ? 1 : 0);
      r.b = b[i];
      rows.push_back(r);
    }
    std::vector<Rational> cr;
    for (long long x : c) cr.emplace_back(x);
    const bool maximize = trial % 2 == 0;
    const RationalLP lp = make_lp(maximize ? Direction::maximize : Direction::minimize, c, a, senses, b);
    const LPSolution sol = simplex_solve_rational(lp);
    const auto expected = oracle::vertex_optimum(cr, rows, maximize);
    if (!expected) {
      EXPECT_EQ(sol.status, LPStatus::infeasible) << "trial " << trial;
      ++infeasible;
      continue;
    }
    ASSERT_EQ(sol.status, LPStatus::optimal) << "trial " << trial;
    EXPECT_EQ(sol.value, *expected) << "trial " << trial;
    EXPECT_EQ(sol.value, sol.dual_value);
    EXPECT_TRUE(satisfies(lp, sol.x));
    ++optimal;
  }
  EXPECT_GT(optimal, 50);
  EXPECT_GT(infeasible, 10);
}

TEST(Epsz, OptimumVertexAndDual) {
  const RationalLP lp = build_epsz_lp();
  const LPSolution sol = simplex_solve_rational(lp);
  ASSERT_EQ(sol.status, LPStatus::optimal);
  EXPECT_EQ(sol.value, make_rational(57, 23));
  EXPECT_EQ(sol.dual_value, make_rational(57, 23));
  RationalVector expected(5);
  expected << make_rational(57, 23), 0, make_rational(13, 23), make_rational(17, 23), make_rational(6, 23);
  EXPECT_EQ(sol.x, expected);
  EXPECT_EQ(tight_rows(lp, sol.x), (std::vector<std::size_t>{0, 2, 3, 4}));
  RationalVector y(5);
  y << make_rational(3, 23), 0, make_rational(3, 46), make_rational(3, 46), make_rational(1, 46);
  EXPECT_EQ(sol.y, y);
  EXPECT_EQ(y.dot(lp.rhs), make_rational(57, 23));
}

TEST(Epsz, PrintedVertexMissesConstraintFive) {
  const RationalLP lp = build_epsz_lp();
  RationalVector printed(5);
  printed << make_rational(57, 23), 0, make_rational(13, 22), make_rational(17, 23), make_rational(6, 23);
  const auto tight = tight_rows(lp, printed);
  EXPECT_EQ(std::find(tight.begin(), tight.end(), 4u), tight.end());
}

TEST(Epsz, PerturbationStaysInsideDualRadius) {
  const RationalLP lp = build_epsz_lp();
  const PerturbationBound pb = perturbation_bound(lp);
  ASSERT_FALSE(pb.dual_vertices.empty());
  const Rational eps = make_rational(1, 1000);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> h(-1000, 1000);
  for (int trial = 0; trial < 30; ++trial) {
    RationalVector d(5);
    for (Eigen::Index i = 0; i < 5; ++i) d(i) = Rational(Integer(h(rng)), Integer(1000000));
    const LPSolution sol = simplex_solve_rational(perturbed(lp, d));
    ASSERT_EQ(sol.status, LPStatus::optimal);
    const Rational gap = sol.value - make_rational(57, 23);
    EXPECT_LE(gap > 0 ? gap : -gap, pb.radius(eps));
  }
}

TEST(MinOrder, SmallExamples) {
  const LayerSpec a{{ColorId{0}, Integer(1)}}, b{{ColorId{1}, Integer(1)}};
  const auto pair = make_clump_graph(3, {a, b}, false);
  const MinOrderResult r2 = min_order_lp(pair, Integer(3));
  EXPECT_EQ(r2.lp_value, 6);
  ASSERT_TRUE(r2.int_value);
  EXPECT_EQ(*r2.int_value, 6);

  const auto path = make_clump_graph(3, {a, b, a});
  const MinOrderResult r3 = min_order_lp(path, Integer(2));
  ASSERT_TRUE(r3.int_value);
  EXPECT_EQ(*r3.int_value, 4);
  EXPECT_EQ(r3.int_weights, (std::vector<Integer>{1, 2, 1}));

  EXPECT_THROW(min_order_lp(path, Integer(0)), std::invalid_argument);
}

TEST(MinOrder, CounterexampleIncumbent) {
  const auto h = counterexample_graph(1, Integer(4), 1);
  std::vector<Integer> w;
  for (const Clump& c : h.clumps()) w.push_back(c.weight);
  const MinOrderResult r = min_order_lp(h, Integer(4), w);
  ASSERT_TRUE(r.int_value);
  EXPECT_LE(*r.int_value, 15);
  EXPECT_LE(r.lp_value, Rational(*r.int_value));
}

// Every weight vector in [1, δ]^clumps is tried; larger weights never help.
TEST(MinOrder, BranchAndBoundMatchesEnumeration) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> delta(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const auto topo = random_layered_graph(rng, {3, 3, 1});
    if (topo.size() > 5) continue;
    const int d = delta(rng);
    std::optional<long long> best;
    std::vector<long long> w(topo.size(), 1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == w.size()) {
        if (w[0] != 1) return;
        for (ClumpId y = 0; y < topo.size(); ++y) {
          long long s = 0;
          for (ClumpId x : topo.neighbors(y)) s += w[x];
          if (s < d) return;
        }
        long long total = 0;
        for (long long x : w) total += x;
        if (!best || total < *best) best = total;
        return;
      }
      for (long long v = 1; v <= d; ++v) {
        w[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    const MinOrderResult r = min_order_lp(topo, Integer(d));
    if (!best) {
      EXPECT_TRUE(r.status == LPStatus::infeasible || !r.int_value);
      continue;
    }
    ASSERT_TRUE(r.int_value);
    EXPECT_EQ(*r.int_value, *best);
    EXPECT_LE(r.lp_value, Rational(*best));
  }
}

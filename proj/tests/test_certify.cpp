#include <random>

#include <gtest/gtest.h>

#include "clumplab/canonical.hpp"
#include "clumplab/certify.hpp"
#include "clumplab/constructions.hpp"
#include "clumplab/lp.hpp"
#include "clumplab/random_graphs.hpp"

using namespace clumplab;

TEST(Certify, UTildeAndCoefficient) {
  for (std::size_t k = 3; k <= 8; ++k) {
    const Rational u = certificate_u_tilde(k);
    EXPECT_EQ(u, make_rational(static_cast<long long>(k) - 1, 3 * static_cast<long long>(k) - 4));
    EXPECT_EQ(1 / u, 3 - make_rational(1, static_cast<long long>(k) - 1));
  }
  EXPECT_EQ(1 / certificate_u_tilde(3), make_rational(5, 2));
}

TEST(Certify, CounterexampleCertificate) {
  const auto h = counterexample_graph(1, Integer(4), 3);
  const DualCertificate cert = dual_certificate(h);
  EXPECT_TRUE(cert.feasible);
  for (const Rational& t : cert.layer_totals) EXPECT_EQ(t, make_rational(2, 5));
  const Rational bound = bound_from_certificate(cert, h.total_weight(), Integer(4));
  EXPECT_EQ(bound, make_rational(5, 2) * Rational(h.total_weight(), Integer(4)) + 1);
  EXPECT_LE(Rational(Integer(diameter(blow_up(h)))), bound);
}

TEST(Certify, RejectsNonCanonicalAndSmallK) {
  LayerSpec l0{{ColorId{0}, Integer(1)}}, l1{{ColorId{1}, Integer(1)}}, l2{{ColorId{0}, Integer(2)}};
  const auto bad = make_clump_graph(3, {l0, l1, l2, l1});
  EXPECT_THROW(dual_certificate(bad), std::invalid_argument);
  const auto two = make_clump_graph(2, {l0, l1});
  EXPECT_THROW(dual_certificate(two), std::invalid_argument);
}

TEST(Certify, VerifyPackingReportsViolations) {
  const auto h = counterexample_graph(1, Integer(4), 1);
  std::vector<Rational> u(h.size(), make_rational(1, 2));
  const PackingReport rep = verify_packing(h, u);
  EXPECT_FALSE(rep.feasible);
  EXPECT_EQ(rep.objective, make_rational(static_cast<long long>(h.size()), 2));
  EXPECT_THROW(verify_packing(h, std::vector<Rational>(2, 0)), std::invalid_argument);
  u[0] = -1;
  EXPECT_THROW(verify_packing(h, u), std::invalid_argument);
}

// Weak duality against the minimum-order program: δ·Σu never exceeds its optimum.
TEST(Certify, WeakDualityAgainstSimplex) {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto raw = random_corpus_graph(rng, {3, 6, 3});
    const Integer delta = min_weighted_degree(raw);
    const auto h = canonicalize(raw, delta).graph;
    const DualCertificate cert = dual_certificate(h);
    ASSERT_TRUE(cert.feasible);
    const MinOrderResult lp = min_order_lp(h, delta, std::nullopt, 1);
    if (lp.status != LPStatus::optimal) continue;
    Rational total = 0;
    for (const Rational& x : cert.u) total += x;
    EXPECT_LE(Rational(delta) * total, lp.lp_value);
    EXPECT_LE(lp.lp_value, Rational(h.total_weight()));
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

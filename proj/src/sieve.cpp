#include "clumplab/sieve.hpp"

#include <stdexcept>

#include "clumplab/canonical.hpp"

namespace clumplab {

namespace {

using Index = long long;

Rational frac(long long num, long long den) { return Rational(Integer(num), Integer(den)); }

void require_three_color_patterns(const LayerProfile& p) {
  if (p.k != 3) throw std::invalid_argument("sieve inequalities need k = 3, got k = " + std::to_string(p.k));
  for (std::size_t i = 0; i < p.depth; ++i) {
    if (!is_three_color_pattern(p.colors[i], p.colors[i + 1])) {
      throw std::invalid_argument("layers " + std::to_string(i) + "," + std::to_string(i + 1) +
                                  " form " + pattern_name(p.colors[i], p.colors[i + 1]) +
                                  ", not an admissible pattern");
    }
  }
}

WindowResult make_window(WindowKind kind, std::size_t i, std::string id, Rational lhs, Rational rhs) {
  WindowResult w{kind, i, std::move(id), std::move(lhs), std::move(rhs), false};
  w.pass = w.lhs >= w.rhs;
  return w;
}

}  // namespace

std::size_t SieveReport::windows_passed() const {
  std::size_t passed = 0;
  for (const WindowResult& w : windows) passed += w.pass ? 1 : 0;
  return passed;
}

SieveReport window_inequalities(const LayerProfile& p, const Integer& delta, const Rational& slack_c) {
  require_three_color_patterns(p);
  SieveReport report;
  report.slack_c = slack_c;
  const Rational d(delta);
  const Index depth = static_cast<Index>(p.depth);
  auto l = [&](Index i) { return Rational(p.ell_at(i)); };
  auto single = [&](Index i) { return p.single(i); };

  for (Index i = 0; i <= depth; ++i) {
    const std::size_t c = p.count_at(i);
    const Rational lhs = 2 * l(i - 1) + 2 * l(i) + 2 * l(i + 1);
    if (c == 1) {
      report.windows.push_back(make_window(WindowKind::one_layer, i, "1L-1", lhs, 2 * d + 2 * l(i)));
    } else if (c == 2) {
      report.windows.push_back(make_window(WindowKind::one_layer, i, "1L-2", lhs, 2 * d + l(i)));
    }
  }

  for (Index i = 0; i < depth; ++i) {
    const Rational outer = l(i - 1) + l(i + 2);
    const bool a = single(i), b = single(i + 1);
    Rational lhs;
    std::string id;
    if (a && b) {
      id = "2L-1";
      lhs = outer + l(i) + l(i + 1);
    } else if (a) {
      id = "2L-2";
      lhs = outer + l(i) + frac(3, 2) * l(i + 1);
    } else if (b) {
      id = "2L-3";
      lhs = outer + frac(3, 2) * l(i) + l(i + 1);
    } else {
      id = "2L-4";
      lhs = outer + frac(4, 3) * (l(i) + l(i + 1));
    }
    report.windows.push_back(make_window(WindowKind::two_layer, i, id, lhs, 2 * d));
  }

  for (Index i = 2; i + 2 <= depth; ++i) {
    const Rational lhs = 2 * (l(i - 2) + l(i - 1) + l(i) + l(i + 1) + l(i + 2));
    const bool a = single(i - 1), b = single(i), c = single(i + 1);
    Rational rhs;
    std::string id;
    if (!a && !b && !c) {
      const std::size_t shared = color_count(p.colors[i - 1] & p.colors[i + 1]);
      id = shared >= 2 ? "3L-1.1" : "3L-1.2";
      rhs = 6 * d - 2 * l(i) - l(i - 1) - l(i + 1);
    } else if (!a && b && !c) {
      id = "3L-2";
      rhs = 6 * d - 2 * l(i) - l(i - 1) - l(i + 1);
    } else if (a && b && c) {
      id = "3L-3";
      rhs = 6 * d - 2 * l(i);
    } else if (a && b) {
      id = "3L-4";
      rhs = 6 * d - 2 * l(i) - l(i + 1);
    } else if (b && c) {
      id = "3L-5";
      rhs = 6 * d - l(i - 1) - 2 * l(i);
    } else {
      id = a && c ? "3L-6" : (a ? "3L-7" : "3L-8");
      rhs = 8 * d - 4 * l(i) - 2 * l(i - 1) - 2 * l(i + 1);
    }
    report.windows.push_back(make_window(WindowKind::three_layer, i, id, lhs, rhs));
  }

  const Rational n(p.n);
  Rational pair_extra = 0;
  Rational triple_extra = 0;
  std::size_t s = 0;
  for (Index i = 0; i <= depth; ++i) {
    if (single(i)) continue;
    for (Index j : {i - 1, i + 1}) {
      if (j < 0 || j > depth) continue;
      pair_extra += single(j) ? l(i) / 2 : l(i) / 3;
    }
    if (i >= 1 && i < depth && (single(i - 1) || single(i + 1))) {
      ++s;
      triple_extra += l(i);
    }
  }
  const Rational allowance = slack_c * d;
  report.pair_sum = {"pair aggregate", 4 * n + pair_extra, 2 * Rational(depth) * d - allowance, false};
  report.pair_sum.pass = report.pair_sum.lhs >= report.pair_sum.rhs;
  report.triple_sum = {"triple aggregate", 7 * n + triple_extra + allowance,
                       3 * d * Rational(depth) + Rational(Integer(s)) * d, false};
  report.triple_sum.pass = report.triple_sum.lhs >= report.triple_sum.rhs;
  return report;
}

GlobalStats global_stats(const LayerProfile& p, const Integer& delta) {
  GlobalStats g;
  g.n = p.n;
  g.depth = p.depth;
  g.delta = delta;
  const Index depth = static_cast<Index>(p.depth);
  Integer single_mass = 0, both = 0, one = 0;
  std::vector<bool> in_d(p.depth + 1, false);
  for (Index i = 0; i <= depth; ++i) {
    const std::size_t ui = static_cast<std::size_t>(i);
    if (p.single(i)) {
      g.singles.push_back(ui);
      single_mass += p.ell[ui];
      continue;
    }
    if (i == 0 || i == depth) continue;
    const bool left = p.single(i - 1), right = p.single(i + 1);
    if (left || right) ++g.s;
    if (p.count[ui] == 2) {
      if (left && right) {
        both += p.ell[ui];
        in_d[ui] = true;
      } else if (left || right) {
        one += p.ell[ui];
      }
    }
  }
  for (std::size_t i = 0; i <= p.depth; ++i) {
    if (in_d[i]) {
      ++g.d_layers;
    } else if ((i > 0 && in_d[i - 1]) || (i < p.depth && in_d[i + 1])) {
      ++g.e_layers;
    } else {
      ++g.f_layers;
    }
  }
  g.mu = Rational(single_mass, p.n);
  g.alpha1 = Rational(both, p.n);
  g.alpha2 = Rational(one, p.n);
  g.phi = Rational(Integer(p.depth) * delta, p.n);
  g.psi = Rational(delta * Integer(g.s), p.n);
  return g;
}

std::vector<ConstraintCheck> check_aggregates(const GlobalStats& g, const Rational& slack_c,
                                              const Integer& delta, const Integer& n) {
  const Rational tol = slack_c * Rational(delta, n);
  auto check = [&](std::string name, Rational lhs, Rational rhs) {
    ConstraintCheck c{std::move(name), std::move(lhs), rhs + tol, false};
    c.pass = c.lhs <= c.rhs;
    return c;
  };
  return {
      check("mu+alpha1+alpha2<=1", g.mu + g.alpha1 + g.alpha2, 1),
      check("psi<=2/3", g.psi, frac(2, 3)),
      check("12phi+4mu-2alpha1-alpha2<=28", 12 * g.phi + 4 * g.mu - 2 * g.alpha1 - g.alpha2, 28),
      check("3phi+psi-alpha1-alpha2<=7", 3 * g.phi + g.psi - g.alpha1 - g.alpha2, 7),
      check("phi<=3psi+3(1-alpha1)", g.phi, 3 * g.psi + 3 * (1 - g.alpha1)),
  };
}

std::vector<ConstraintCheck> partition_checks(const GlobalStats& g, const Rational& slack_c) {
  ConstraintCheck de{"|D|+|E|<=3s", Rational(Integer(g.d_layers + g.e_layers)),
                     Rational(Integer(3 * g.s)), false};
  de.pass = de.lhs <= de.rhs;
  ConstraintCheck f{"|F|<=3(1-alpha1)n/delta+C", Rational(Integer(g.f_layers)),
                    3 * (1 - g.alpha1) * Rational(g.n, g.delta) + slack_c, false};
  f.pass = f.lhs <= f.rhs;
  return {de, f};
}

bool no_interior_singles(const LayerProfile& p) {
  for (std::size_t i = 1; i < p.depth; ++i) {
    if (p.count[i] == 1) return false;
  }
  return true;
}

ConstraintCheck no_singles_bound(const GlobalStats& g, const Rational& slack_c) {
  ConstraintCheck c{"phi<=7/3+C*delta/n", g.phi, frac(7, 3) + slack_c * Rational(g.delta, g.n), false};
  c.pass = c.lhs <= c.rhs;
  return c;
}

LayerProfile cap_layer_weights(const LayerProfile& profile, const Integer& cap) {
  LayerProfile out = profile;
  out.n = 0;
  for (Integer& l : out.ell) {
    if (l > cap) l = cap;
    out.n += l;
  }
  return out;
}

}  // namespace clumplab

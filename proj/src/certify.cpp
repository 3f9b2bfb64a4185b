#include "clumplab/certify.hpp"

#include <stdexcept>

#include "clumplab/canonical.hpp"

namespace clumplab {

namespace {

WeightedClumpGraph with_colors(const WeightedClumpGraph& h, std::size_t k) {
  if (k == h.k()) return h;
  return make_clump_graph(k, h.layer_specs(), h.rooted());
}

}  // namespace

Rational certificate_u_tilde(std::size_t k) {
  return Rational(Integer(k - 1), Integer(3 * k - 4));
}

DualCertificate dual_certificate(const WeightedClumpGraph& h, std::size_t k) {
  return dual_certificate(with_colors(h, k));
}

DualCertificate dual_certificate(const WeightedClumpGraph& h) {
  const std::size_t k = h.k();
  if (k < 3) throw std::invalid_argument("dual certificate needs k >= 3");
  const CanonicalReport report = check_canonical(h, 0);
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    throw std::invalid_argument("graph is not canonical: property " + std::to_string(v.property) +
                                " fails at layer " + std::to_string(v.layer));
  }

  DualCertificate cert;
  cert.k = k;
  cert.u.assign(h.size(), Rational(0));
  cert.u_tilde = certificate_u_tilde(k);
  cert.c = 1;
  const Integer base(3 * k - 4);
  for (std::size_t i = 0; i < h.layer_count(); ++i) {
    const std::size_t c = h.clump_count(i);
    if (c < k) {
      const Rational each(Integer(k - 1), base * Integer(c));
      for (ClumpId id = h.layer_begin(i); id < h.layer_end(i); ++id) cert.u[id] = each;
    } else {
      ColorSet flanks = 0;
      if (i > 0) flanks |= h.layer_colors(i - 1);
      if (i < h.depth()) flanks |= h.layer_colors(i + 1);
      std::size_t x_count = 0;
      for (const Clump& cl : h.layer(i)) x_count += contains(flanks, cl.color) ? 0 : 1;
      const Rational x_weight(Integer(1), base);
      const Rational y_weight =
          x_count < k ? x_weight - Rational(Integer(1), base * Integer(k - x_count)) : Rational(0);
      for (ClumpId id = h.layer_begin(i); id < h.layer_end(i); ++id) {
        cert.u[id] = contains(flanks, h.clump(id).color) ? y_weight : x_weight;
      }
    }
    Rational total = 0;
    for (ClumpId id = h.layer_begin(i); id < h.layer_end(i); ++id) total += cert.u[id];
    cert.layer_totals.push_back(total);
  }
  cert.feasible = verify_packing(h, cert.u).feasible;
  return cert;
}

PackingReport verify_packing(const WeightedClumpGraph& h, const std::vector<Rational>& u) {
  if (u.size() != h.size()) {
    throw std::invalid_argument("packing has " + std::to_string(u.size()) + " weights for " +
                                std::to_string(h.size()) + " clumps");
  }
  PackingReport report;
  report.objective = 0;
  for (ClumpId id = 0; id < h.size(); ++id) {
    if (u[id] < 0) throw std::invalid_argument("negative dual weight at clump " + std::to_string(id));
    report.objective += u[id];
  }
  for (ClumpId id = 0; id < h.size(); ++id) {
    Rational sum = 0;
    for (ClumpId other : h.neighbors(id)) sum += u[other];
    report.slack.push_back(1 - sum);
    if (sum > 1) report.feasible = false;
  }
  return report;
}

Rational bound_from_certificate(const DualCertificate& cert, const Integer& n, const Integer& delta) {
  if (!cert.feasible) throw std::invalid_argument("certificate is infeasible");
  for (const Rational& total : cert.layer_totals) {
    if (total < cert.u_tilde) throw std::invalid_argument("a layer total is below u~");
  }
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  return Rational(n, delta) / cert.u_tilde + cert.c;
}

}  // namespace clumplab

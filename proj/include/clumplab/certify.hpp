#pragma once

#include <cstddef>
#include <vector>

#include "clumplab/clump_graph.hpp"

namespace clumplab {

struct PackingReport {
  bool feasible = true;
  // 1 minus the neighbor dual-weight sum, per clump.
  std::vector<Rational> slack;
  Rational objective;
};

struct DualCertificate {
  std::size_t k = 0;
  std::vector<Rational> u;  // indexed by ClumpId
  std::vector<Rational> layer_totals;
  Rational u_tilde;
  Rational c;
  bool feasible = false;
};

// Throws std::invalid_argument when h is not canonical or k < 3.
DualCertificate dual_certificate(const WeightedClumpGraph& h);
// Reinterprets h with k colors (k must cover every color in use) before certifying.
DualCertificate dual_certificate(const WeightedClumpGraph& h, std::size_t k);

PackingReport verify_packing(const WeightedClumpGraph& h, const std::vector<Rational>& u);

// (1/ũ)(n/δ) + C. Throws when the certificate is infeasible or a layer total is below ũ.
Rational bound_from_certificate(const DualCertificate& cert, const Integer& n, const Integer& delta);

// Per-layer guaranteed total (k-1)/(3k-4) and the implied coefficient 1/ũ.
Rational certificate_u_tilde(std::size_t k);

}  // namespace clumplab

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clumplab/clump_graph.hpp"
#include "clumplab/sieve.hpp"

namespace clumplab {

struct SuiteConfig {
  std::vector<std::size_t> s_values{1, 2};
  std::size_t delta_span = 4;  // δ runs over 2s .. 2s + delta_span
  std::vector<std::size_t> p_values{1, 2, 3};
  std::vector<std::size_t> gap_r{2};
  Integer gap_delta_max{40};
  Rational slack = kDefaultSlack;
  std::size_t threads = 1;
  std::size_t lp_node_limit = 5000;
};

struct SuiteRow {
  std::string instance;  // "cx-s1-d4-p2"
  std::size_t s = 0;
  Integer delta;
  std::size_t p = 0;
  Integer n;
  std::size_t depth = 0;
  Integer min_degree;
  Rational phi;
  std::optional<Rational> certificate_bound;
  std::size_t sieve_passed = 0;
  std::size_t sieve_total = 0;
  std::optional<Integer> min_order;
  std::string failure;  // empty when every check passed

  bool pass() const { return failure.empty(); }
};

struct GapSignChange {
  std::size_t r = 0;
  Integer first_positive;  // least δ in the sweep with coefficient_gap > 0
};

struct SuiteReport {
  std::vector<SuiteRow> rows;  // ordered by (s, δ, p)
  std::vector<GapSignChange> sign_changes;
  std::string failing_instance;

  bool ok() const { return failing_instance.empty(); }
  int exit_code() const { return ok() ? 0 : 1; }
};

SuiteRow run_instance(std::size_t s, const Integer& delta, std::size_t p, const SuiteConfig& config);
SuiteReport run_suite(const SuiteConfig& config);

// Columns: instance,s,delta,p,n,D,min_degree,phi,certificate_bound,sieve_passed,sieve_total,min_order
std::string suite_csv(const SuiteReport& report);
// One block per (s, p), blank-line separated; columns: delta phi(decimal) phi(exact).
std::string suite_gnuplot(const SuiteReport& report);

}  // namespace clumplab

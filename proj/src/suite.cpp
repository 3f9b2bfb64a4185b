#include "clumplab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clumplab/canonical.hpp"
#include "clumplab/certify.hpp"
#include "clumplab/constructions.hpp"
#include "clumplab/lp.hpp"

namespace clumplab {

namespace {

void fail(SuiteRow& row, const std::string& what) {
  if (row.failure.empty()) row.failure = what;
}

}  // namespace

SuiteRow run_instance(std::size_t s, const Integer& delta, std::size_t p, const SuiteConfig& config) {
  SuiteRow row;
  row.s = s;
  row.delta = delta;
  row.p = p;
  row.instance = "cx-s" + std::to_string(s) + "-d" + delta.str() + "-p" + std::to_string(p);
  try {
    const WeightedClumpGraph h = counterexample_graph(s, delta, p);
    row.n = h.total_weight();
    row.min_degree = min_weighted_degree(h);
    row.depth = diameter(blow_up(h));
    row.phi = normalized_diameter(row.depth, delta, row.n);
    if (row.min_degree < delta) fail(row, "min weighted degree " + row.min_degree.str() + " < delta");
    if (row.n != counterexample_order(s, delta, p)) fail(row, "order differs from the closed form");
    if (row.depth != counterexample_depth(s, p)) fail(row, "diameter differs from the closed form");

    std::optional<WeightedClumpGraph> canon;
    try {
      canon = check_canonical(h, delta).canonical() ? h : canonicalize(h, delta).graph;
    } catch (const CanonicalizationError&) {
    }
    if (canon) {
      const DualCertificate cert = dual_certificate(*canon);
      if (!cert.feasible) {
        fail(row, "dual certificate infeasible");
      } else {
        row.certificate_bound = bound_from_certificate(cert, row.n, delta);
        if (Rational(Integer(row.depth)) > *row.certificate_bound) fail(row, "diameter exceeds certificate bound");
      }
      if (canon->k() == 3) {
        const SieveReport sieve = window_inequalities(layer_profile(*canon), delta, config.slack);
        row.sieve_passed = sieve.windows_passed();
        row.sieve_total = sieve.windows.size();
        if (!sieve.all_windows_pass()) fail(row, "sieve window failed");
        if (!sieve.pair_sum.pass || !sieve.triple_sum.pass) fail(row, "sieve aggregate failed");
      }
    }

    if (p == 1 && h.size() <= kMaxBranchClumps) {
      std::vector<Integer> incumbent;
      for (const Clump& c : h.clumps()) incumbent.push_back(c.weight);
      const MinOrderResult lp = min_order_lp(h, delta, incumbent, config.lp_node_limit);
      row.min_order = lp.int_value;
      if (lp.status != LPStatus::optimal) fail(row, "minimum-order LP not optimal");
      if (lp.int_value && (*lp.int_value > row.n || Rational(*lp.int_value) < lp.lp_value)) {
        fail(row, "minimum-order ILP inconsistent");
      }
    }
  } catch (const std::exception& e) {
    fail(row, e.what());
  }
  return row;
}

SuiteReport run_suite(const SuiteConfig& config) {
  struct Job {
    std::size_t s;
    Integer delta;
    std::size_t p;
  };
  std::vector<std::size_t> s_values = config.s_values, p_values = config.p_values;
  std::sort(s_values.begin(), s_values.end());
  std::sort(p_values.begin(), p_values.end());
  if (!s_values.empty() && s_values.front() == 0) throw std::invalid_argument("suite: s must be at least 1");
  if (!p_values.empty() && p_values.front() == 0) throw std::invalid_argument("suite: p must be at least 1");
  std::vector<Job> jobs;
  for (std::size_t s : s_values) {
    for (std::size_t off = 0; off <= config.delta_span; ++off) {
      for (std::size_t p : p_values) jobs.push_back({s, Integer(2 * s + off), p});
    }
  }

  SuiteReport report;
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      report.rows[i] = run_instance(jobs[i].s, jobs[i].delta, jobs[i].p, config);
    }
  };
  const std::size_t pool = std::max<std::size_t>(1, std::min(config.threads, jobs.size()));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < pool; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  for (const SuiteRow& row : report.rows) {
    if (!row.pass()) {
      report.failing_instance = row.instance;
      break;
    }
  }
  for (std::size_t r : config.gap_r) {
    if (r < 2) continue;
    bool positive = false;
    for (Integer d = 1; d <= config.gap_delta_max; ++d) {
      const bool now = coefficient_gap(r, d) > 0;
      if (now && !positive) report.sign_changes.push_back({r, d});
      positive = now;
    }
  }
  return report;
}

std::string suite_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "instance,s,delta,p,n,D,min_degree,phi,certificate_bound,sieve_passed,sieve_total,min_order\n";
  for (const SuiteRow& r : report.rows) {
    out << r.instance << ',' << r.s << ',' << r.delta << ',' << r.p << ',' << r.n << ',' << r.depth << ','
        << r.min_degree << ',' << to_string(r.phi) << ',' << (r.certificate_bound ? to_string(*r.certificate_bound) : "")
        << ',' << r.sieve_passed << ',' << r.sieve_total << ',' << (r.min_order ? r.min_order->str() : "") << '\n';
  }
  return out.str();
}

std::string suite_gnuplot(const SuiteReport& report) {
  std::vector<const SuiteRow*> rows;
  for (const SuiteRow& r : report.rows) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const SuiteRow* a, const SuiteRow* b) {
    if (a->s != b->s) return a->s < b->s;
    if (a->p != b->p) return a->p < b->p;
    return a->delta < b->delta;
  });
  std::ostringstream out;
  out << std::setprecision(10);
  const SuiteRow* prev = nullptr;
  for (const SuiteRow* r : rows) {
    if (!prev || prev->s != r->s || prev->p != r->p) {
      if (prev) out << "\n\n";
      out << "# s=" << r->s << " p=" << r->p << "\n";
    }
    out << r->delta << ' ' << r->phi.convert_to<double>() << ' ' << to_string(r->phi) << '\n';
    prev = r;
  }
  return out.str();
}

}  // namespace clumplab

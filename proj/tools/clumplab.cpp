#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clumplab/canonical.hpp"
#include "clumplab/certify.hpp"
#include "clumplab/constructions.hpp"
#include "clumplab/io.hpp"
#include "clumplab/lp.hpp"
#include "clumplab/search.hpp"
#include "clumplab/sieve.hpp"
#include "clumplab/suite.hpp"

using namespace clumplab;
using nlohmann::json;

namespace {

struct Options {
  std::string export_edges;
  std::string in, out, log, weights, report, csv, gnuplot;
  std::string delta = "0";
  std::string slack;
  std::size_t s = 1, p = 1, r = 1, diam = 1, k = 3, dmax = 3, budget = 100000, threads = 1;
  std::string s_values = "1,2", p_values = "1,2,3";
  std::size_t delta_span = 4;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

Integer parse_integer(const std::string& text, const char* name) {
  const Rational q = parse_rational(text);
  if (!is_integral(q)) throw std::invalid_argument(std::string(name) + " must be an integer");
  return floor_of(q);
}

std::vector<std::size_t> parse_list(const std::string& text, const char* name) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument(std::string(name) + ": bad entry '" + item + "'");
    out.push_back(v);
  }
  return out;
}

Rational slack_value(const Options& o) {
  if (!o.slack.empty()) return parse_rational(o.slack);
  if (const char* env = std::getenv("CLUMPLAB_SLACK"); env && *env) return parse_rational(env);
  return kDefaultSlack;
}

void maybe_export(const Options& o, const WeightedClumpGraph& h) {
  if (!o.export_edges.empty()) write_text(o.export_edges, edge_list(blow_up(h)));
}

WeightedClumpGraph load(const Options& o) { return parse_clump_json(read_file(o.in)); }

int emit_graph(const Options& o, const WeightedClumpGraph& h) {
  write_text(o.out, serialize_clump_json(h));
  maybe_export(o, h);
  return 0;
}

int cmd_verify(const Options& o) {
  const WeightedClumpGraph h = load(o);
  const Integer delta = parse_integer(o.delta, "delta");
  const SimpleGraph g = blow_up(h);
  const Integer min_deg = min_weighted_degree(h);
  const std::size_t diam = diameter(g);
  const bool ok = min_deg >= delta;
  write_json(o.out, {{"n", integer_json(h.total_weight())},
                     {"depth", h.depth()},
                     {"diameter", diam},
                     {"edges", g.edge_count()},
                     {"min_degree", integer_json(min_deg)},
                     {"phi", rational_json(normalized_diameter(diam, min_deg, h.total_weight()))},
                     {"min_degree_ok", ok}});
  maybe_export(o, h);
  return ok ? 0 : 1;
}

int cmd_canonicalize(const Options& o) {
  const WeightedClumpGraph h = load(o);
  const Integer delta = parse_integer(o.delta, "delta");
  try {
    const CanonicalResult res = canonicalize(h, delta);
    write_text(o.out, serialize_clump_json(res.graph));
    if (!o.log.empty()) write_json(o.log, transform_log_json(res.log));
    maybe_export(o, res.graph);
    return check_canonical(res.graph, delta).canonical() ? 0 : 1;
  } catch (const CanonicalizationError& e) {
    if (!o.log.empty()) write_json(o.log, transform_log_json(e.log()));
    throw;
  }
}

int cmd_certify(const Options& o) {
  const WeightedClumpGraph h = load(o);
  json out;
  bool ok = false;
  if (!o.weights.empty()) {
    const std::vector<Rational> u = parse_weights_json(read_file(o.weights), h);
    const PackingReport rep = verify_packing(h, u);
    out = packing_json(rep);
    ok = rep.feasible;
  } else {
    const DualCertificate cert = dual_certificate(h, o.k);
    out = certificate_json(h, cert);
    const Integer delta = o.delta == "0" ? min_weighted_degree(h) : parse_integer(o.delta, "delta");
    if (cert.feasible) {
      const Rational bound = bound_from_certificate(cert, h.total_weight(), delta);
      const std::size_t diam = diameter(blow_up(h));
      out["bound"] = rational_json(bound);
      out["diameter"] = diam;
      ok = Rational(Integer(diam)) <= bound;
    }
  }
  write_json(o.out, out);
  maybe_export(o, h);
  return ok ? 0 : 1;
}

int cmd_sieve(const Options& o) {
  const WeightedClumpGraph h = load(o);
  const Integer delta = parse_integer(o.delta, "delta");
  const Rational slack = slack_value(o);
  const LayerProfile prof = layer_profile(h);
  const SieveReport rep = window_inequalities(prof, delta, slack);
  const GlobalStats stats = global_stats(prof, delta);
  json out = sieve_report_json(rep);
  out["stats"] = global_stats_json(stats);
  json checks = json::array();
  bool ok = rep.all_windows_pass() && rep.pair_sum.pass && rep.triple_sum.pass;
  for (const ConstraintCheck& c : check_aggregates(stats, slack, delta, prof.n)) {
    checks.push_back(constraint_json(c));
    ok = ok && c.pass;
  }
  out["aggregates"] = checks;
  json partition = json::array();
  for (const ConstraintCheck& c : partition_checks(stats, slack)) partition.push_back(constraint_json(c));
  out["partition"] = partition;
  if (no_interior_singles(prof)) {
    const ConstraintCheck c = no_singles_bound(stats, slack);
    out["no_singles_bound"] = constraint_json(c);
    ok = ok && c.pass;
  }
  write_json(o.report.empty() ? o.out : o.report, out);
  maybe_export(o, h);
  return ok ? 0 : 1;
}

int cmd_lp_epsz(const Options& o) {
  const RationalLP lp = build_epsz_lp();
  const LPSolution sol = simplex_solve_rational(lp);
  json out = lp_solution_json(sol);
  json tight = json::array();
  for (std::size_t i : tight_rows(lp, sol.x)) tight.push_back(i + 1);
  out["tight_constraints"] = tight;
  out["variables"] = {"phi", "mu", "psi", "alpha1", "alpha2"};
  const PerturbationBound pb = perturbation_bound(lp);
  out["dual_vertices"] = pb.dual_vertices.size();
  out["dual_max_l1"] = rational_json(pb.max_l1);
  write_json(o.out, out);
  return sol.status == LPStatus::optimal ? 0 : 1;
}

int cmd_lp_min_order(const Options& o) {
  const WeightedClumpGraph h = load(o);
  const Integer delta = parse_integer(o.delta, "delta");
  std::vector<Integer> incumbent;
  for (const Clump& c : h.clumps()) incumbent.push_back(c.weight);
  const MinOrderResult r = min_order_lp(h, delta, incumbent);
  json out = {{"status", std::string(status_name(r.status))}, {"nodes", r.nodes}};
  if (r.status == LPStatus::optimal) {
    out["lp_value"] = rational_json(r.lp_value);
    json w = json::array();
    for (const Rational& x : r.lp_weights) w.push_back(rational_json(x));
    out["lp_weights"] = w;
  }
  if (r.int_value) {
    out["int_value"] = integer_json(*r.int_value);
    json w = json::array();
    for (const Integer& x : r.int_weights) w.push_back(integer_json(x));
    out["int_weights"] = w;
    maybe_export(o, with_weights(h, r.int_weights));
  } else {
    out["int_value"] = "unknown";
  }
  write_json(o.out, out);
  return r.status == LPStatus::optimal ? 0 : 1;
}

int cmd_search(const Options& o) {
  const SearchResult r = extremal_search(o.k, parse_integer(o.delta, "delta"), o.dmax, o.budget, o.threads);
  write_json(o.out, search_result_json(r));
  return r.budget_exceeded ? 2 : 0;
}

int cmd_suite(const Options& o) {
  SuiteConfig cfg;
  cfg.s_values = parse_list(o.s_values, "--s");
  cfg.p_values = parse_list(o.p_values, "--p");
  cfg.delta_span = o.delta_span;
  cfg.slack = slack_value(o);
  cfg.threads = o.threads;
  const SuiteReport rep = run_suite(cfg);
  write_text(o.csv.empty() ? o.out : o.csv, suite_csv(rep));
  if (!o.gnuplot.empty()) write_text(o.gnuplot, suite_gnuplot(rep));
  for (const GapSignChange& g : rep.sign_changes) {
    std::cerr << "coefficient_gap sign change: r=" << g.r << " at delta=" << g.first_positive << "\n";
  }
  if (!rep.ok()) std::cerr << "failing instance: " << rep.failing_instance << "\n";
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted clump graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--export-edges", o.export_edges, "Write the blow-up as an edge list to this path");

  auto* gen = app.add_subcommand("generate", "Emit a construction as clump-graph JSON");
  gen->require_subcommand(1);
  auto* cx = gen->add_subcommand("counterexample", "Juxtaposed counterexample blocks");
  cx->add_option("--s", o.s)->required();
  cx->add_option("--delta", o.delta)->required();
  cx->add_option("--p", o.p)->required();
  auto* odd = gen->add_subcommand("eppt-odd", "Odd clique-chain construction");
  auto* even = gen->add_subcommand("eppt-even", "Even clique-chain construction");
  for (auto* sub : {cx, odd, even}) sub->add_option("--out", o.out, "Output path (default stdout)");
  for (auto* sub : {odd, even}) {
    sub->add_option("--r", o.r)->required();
    sub->add_option("--delta", o.delta)->required();
    sub->add_option("--diam", o.diam)->required();
  }

  auto* verify = app.add_subcommand("verify", "Order, diameter and minimum degree of a clump graph");
  verify->add_option("--in", o.in)->required();
  verify->add_option("--delta", o.delta);
  verify->add_option("--out", o.out);

  auto* canon = app.add_subcommand("canonicalize", "Rewrite into canonical form");
  canon->add_option("--in", o.in)->required();
  canon->add_option("--delta", o.delta)->required();
  canon->add_option("--out", o.out);
  canon->add_option("--log", o.log);

  auto* cert = app.add_subcommand("certify", "Dual packing certificate and diameter bound");
  cert->add_option("--in", o.in)->required();
  cert->add_option("--k", o.k)->required();
  cert->add_option("--weights", o.weights, "Check these dual weights instead of building them");
  cert->add_option("--delta", o.delta);
  cert->add_option("--out", o.out);

  auto* sieve = app.add_subcommand("sieve", "Window and aggregate inequalities for k = 3");
  sieve->add_option("--in", o.in)->required();
  sieve->add_option("--delta", o.delta)->required();
  sieve->add_option("--slack", o.slack);
  sieve->add_option("--report", o.report);

  auto* lp = app.add_subcommand("lp", "Exact linear programs");
  lp->require_subcommand(1);
  auto* epsz = lp->add_subcommand("epsz", "Solve the five-variable program");
  auto* mo = lp->add_subcommand("min-order", "Minimum order for a fixed topology");
  mo->add_option("--in", o.in)->required();
  mo->add_option("--delta", o.delta)->required();
  for (auto* sub : {epsz, mo}) sub->add_option("--out", o.out);

  auto* search = app.add_subcommand("search", "Minimum order per diameter over canonical patterns");
  search->add_option("--k", o.k)->required();
  search->add_option("--delta", o.delta)->required();
  search->add_option("--dmax", o.dmax)->required();
  search->add_option("--budget", o.budget);
  search->add_option("--threads", o.threads);
  search->add_option("--out", o.out);

  auto* suite = app.add_subcommand("suite", "Run the counterexample grid and write a CSV report");
  suite->add_option("--s", o.s_values, "Comma-separated s values; empty for none");
  suite->add_option("--p", o.p_values, "Comma-separated p values");
  suite->add_option("--delta-span", o.delta_span);
  suite->add_option("--slack", o.slack);
  suite->add_option("--threads", o.threads);
  suite->add_option("--csv", o.csv);
  suite->add_option("--gnuplot", o.gnuplot);

  CLI11_PARSE(app, argc, argv);
  try {
    if (cx->parsed()) return emit_graph(o, counterexample_graph(o.s, parse_integer(o.delta, "delta"), o.p));
    if (odd->parsed()) return emit_graph(o, eppt_odd(o.r, parse_integer(o.delta, "delta"), o.diam));
    if (even->parsed()) return emit_graph(o, eppt_even(o.r, parse_integer(o.delta, "delta"), o.diam).graph);
    if (verify->parsed()) return cmd_verify(o);
    if (canon->parsed()) return cmd_canonicalize(o);
    if (cert->parsed()) return cmd_certify(o);
    if (sieve->parsed()) return cmd_sieve(o);
    if (epsz->parsed()) return cmd_lp_epsz(o);
    if (mo->parsed()) return cmd_lp_min_order(o);
    if (search->parsed()) return cmd_search(o);
    if (suite->parsed()) return cmd_suite(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

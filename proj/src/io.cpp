#include "clumplab/io.hpp"

#include <limits>
#include <sstream>

namespace clumplab {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
}

const json& field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) throw SchemaError(path.empty() ? name : path + "." + name, "missing field");
  return *it;
}

std::string join(const std::string& path, const char* name) { return path.empty() ? name : path + "." + name; }

long long small_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<unsigned long long>() > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
    throw SchemaError(path, "integer out of range");
  }
  return v.get<long long>();
}

Integer big_int(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Integer(small_int(v, path));
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
    if (digits) return Integer(s);
  }
  throw SchemaError(path, "expected an integer or a decimal string");
}

}  // namespace

json integer_json(const Integer& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max()) {
    return z.convert_to<long long>();
  }
  return z.str();
}

json rational_json(const Rational& q) { return to_string(q); }

WeightedClumpGraph parse_clump_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw SchemaError("(root)", "expected an object");
  const long long k = small_int(field(doc, "k", ""), "k");
  if (k < 2) throw ValidationError("k must be at least 2, got " + std::to_string(k));
  bool rooted = true;
  if (auto it = doc.find("rooted"); it != doc.end()) {
    if (!it->is_boolean()) throw SchemaError("rooted", "expected a boolean");
    rooted = it->get<bool>();
  }
  const json& layers = field(doc, "layers", "");
  if (!layers.is_array()) throw SchemaError("layers", "expected an array");
  std::vector<LayerSpec> spec;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const std::string lp = "layers[" + std::to_string(i) + "]";
    if (!layers[i].is_array()) throw SchemaError(lp, "expected an array");
    LayerSpec layer;
    for (std::size_t j = 0; j < layers[i].size(); ++j) {
      const std::string cp = lp + "[" + std::to_string(j) + "]";
      const json& c = layers[i][j];
      const long long color = small_int(field(c, "color", cp), join(cp, "color"));
      if (color < 0 || color > std::numeric_limits<std::uint32_t>::max()) throw SchemaError(join(cp, "color"), "negative or oversized color");
      layer.push_back({ColorId{static_cast<std::uint32_t>(color)}, big_int(field(c, "weight", cp), join(cp, "weight"))});
    }
    spec.push_back(std::move(layer));
  }
  return make_clump_graph(static_cast<std::size_t>(k), std::move(spec), rooted);
}

std::string serialize_clump_json(const WeightedClumpGraph& h) {
  std::ostringstream out;
  out << "{\"k\": " << h.k();
  if (!h.rooted()) out << ", \"rooted\": false";
  out << ", \"layers\": [\n";
  for (std::size_t i = 0; i < h.layer_count(); ++i) {
    out << "  [";
    bool first = true;
    for (const Clump& c : h.layer(i)) {
      out << (first ? "" : ", ") << "{\"color\": " << c.color.index << ", \"weight\": " << integer_json(c.weight).dump()
          << "}";
      first = false;
    }
    out << "]" << (i + 1 < h.layer_count() ? "," : "") << "\n";
  }
  out << "]}\n";
  return out.str();
}

std::vector<Rational> parse_weights_json(std::string_view text, const WeightedClumpGraph& h) {
  const json doc = parse_document(text);
  const json& u = field(doc, "u", "");
  if (!u.is_array()) throw SchemaError("u", "expected an array");
  std::vector<Rational> out(h.size(), Rational(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    const std::string p = "u[" + std::to_string(i) + "]";
    const long long layer = small_int(field(u[i], "layer", p), join(p, "layer"));
    const long long color = small_int(field(u[i], "color", p), join(p, "color"));
    const json& value = field(u[i], "value", p);
    Rational q;
    try {
      q = value.is_number_integer() ? Rational(small_int(value, join(p, "value")))
                                    : parse_rational(value.get<std::string>());
    } catch (const json::exception&) {
      throw SchemaError(join(p, "value"), "expected a \"p/q\" string");
    } catch (const std::invalid_argument& e) {
      throw SchemaError(join(p, "value"), e.what());
    }
    if (layer < 0 || color < 0) throw SchemaError(p, "negative layer or color");
    if (static_cast<std::size_t>(layer) >= h.layer_count()) throw SchemaError(join(p, "layer"), "no such layer");
    const auto id = h.find(static_cast<std::size_t>(layer), ColorId{static_cast<std::uint32_t>(color)});
    if (!id) throw SchemaError(p, "no clump with this layer and color");
    out[*id] = q;
  }
  return out;
}

json certificate_json(const WeightedClumpGraph& h, const DualCertificate& cert) {
  json u = json::array();
  for (ClumpId id = 0; id < h.size(); ++id) {
    u.push_back({{"layer", h.clump(id).layer}, {"color", h.clump(id).color.index}, {"value", rational_json(cert.u[id])}});
  }
  json totals = json::array();
  for (const Rational& t : cert.layer_totals) totals.push_back(rational_json(t));
  return {{"k", cert.k},
          {"u", u},
          {"layer_totals", totals},
          {"u_tilde", rational_json(cert.u_tilde)},
          {"c", rational_json(cert.c)},
          {"feasible", cert.feasible}};
}

json packing_json(const PackingReport& r) {
  json slack = json::array();
  for (const Rational& s : r.slack) slack.push_back(rational_json(s));
  return {{"feasible", r.feasible}, {"objective", rational_json(r.objective)}, {"slack", slack}};
}

json transform_log_json(const TransformLog& log) {
  auto layers_json = [](const std::vector<LayerSpec>& layers) {
    json out = json::array();
    for (const LayerSpec& layer : layers) {
      json l = json::array();
      for (const LayerEntry& e : layer) l.push_back({{"color", e.color.index}, {"weight", integer_json(e.weight)}});
      out.push_back(l);
    }
    return out;
  };
  json entries = json::array();
  for (const TransformEntry& e : log.entries) {
    json j = {{"rule", std::string(rule_name(e.rule))},
              {"layer", e.layer},
              {"window_first", e.window_first},
              {"before", layers_json(e.before)},
              {"after", layers_json(e.after)}};
    if (e.swap) {
      j["swap"] = {{"a", e.swap->a.index},
                   {"b", e.swap->b.index},
                   {"first_layer", e.swap->first_layer},
                   {"last_layer", e.swap->last_layer}};
    }
    entries.push_back(j);
  }
  return {{"entries", entries}};
}

json canonical_report_json(const CanonicalReport& r) {
  json violations = json::array();
  for (const Violation& v : r.violations) violations.push_back({{"layer", v.layer}, {"property", v.property}});
  return {{"canonical", r.canonical()},
          {"violations", violations},
          {"patterns_checked", r.patterns_checked},
          {"pattern_failures", r.pattern_failures},
          {"min_degree_ok", r.min_degree_ok}};
}

json sieve_report_json(const SieveReport& r) {
  static constexpr const char* kinds[] = {"one_layer", "two_layer", "three_layer"};
  json windows = json::array();
  for (const WindowResult& w : r.windows) {
    windows.push_back({{"kind", kinds[static_cast<int>(w.kind)]},
                       {"index", w.index},
                       {"case", w.case_id},
                       {"lhs", rational_json(w.lhs)},
                       {"rhs", rational_json(w.rhs)},
                       {"pass", w.pass}});
  }
  auto agg = [](const AggregateResult& a) {
    return json{{"name", a.name}, {"lhs", rational_json(a.lhs)}, {"rhs", rational_json(a.rhs)}, {"pass", a.pass}};
  };
  return {{"slack_c", rational_json(r.slack_c)},
          {"windows_passed", r.windows_passed()},
          {"windows_total", r.windows.size()},
          {"windows", windows},
          {"pair_sum", agg(r.pair_sum)},
          {"triple_sum", agg(r.triple_sum)}};
}

json global_stats_json(const GlobalStats& g) {
  return {{"n", integer_json(g.n)},
          {"depth", g.depth},
          {"delta", integer_json(g.delta)},
          {"mu", rational_json(g.mu)},
          {"alpha1", rational_json(g.alpha1)},
          {"alpha2", rational_json(g.alpha2)},
          {"phi", rational_json(g.phi)},
          {"psi", rational_json(g.psi)},
          {"s", g.s},
          {"singles", g.singles},
          {"d_layers", g.d_layers},
          {"e_layers", g.e_layers},
          {"f_layers", g.f_layers}};
}

json constraint_json(const ConstraintCheck& c) {
  return {{"name", c.name}, {"lhs", rational_json(c.lhs)}, {"rhs", rational_json(c.rhs)}, {"pass", c.pass}};
}

std::string_view status_name(LPStatus status) {
  switch (status) {
    case LPStatus::optimal:
      return "optimal";
    case LPStatus::unbounded:
      return "unbounded";
    case LPStatus::infeasible:
      return "infeasible";
  }
  return "unknown";
}

json lp_solution_json(const LPSolution& s) {
  json out = {{"status", std::string(status_name(s.status))}};
  if (s.status != LPStatus::optimal) return out;
  json x = json::array(), y = json::array();
  for (Eigen::Index i = 0; i < s.x.size(); ++i) x.push_back(rational_json(s.x(i)));
  for (Eigen::Index i = 0; i < s.y.size(); ++i) y.push_back(rational_json(s.y(i)));
  out["value"] = rational_json(s.value);
  out["vertex"] = x;
  out["dual"] = y;
  out["dual_value"] = rational_json(s.dual_value);
  return out;
}

json search_result_json(const SearchResult& r) {
  json frontier = json::array();
  for (const auto& [d, e] : r.frontier) {
    json pattern = json::array();
    for (ColorSet s : e.pattern) {
      json colors = json::array();
      for (ColorId c : colors_in(s)) colors.push_back(c.index);
      pattern.push_back(colors);
    }
    json weights = json::array();
    for (const Clump& c : e.witness.clumps()) weights.push_back(integer_json(c.weight));
    frontier.push_back({{"diameter", d},
                        {"min_order", integer_json(e.min_order)},
                        {"phi", rational_json(e.phi)},
                        {"pattern", pattern},
                        {"weights", weights}});
  }
  return {{"frontier", frontier},
          {"best_phi", rational_json(r.best_phi)},
          {"topologies", r.topologies},
          {"budget_exceeded", r.budget_exceeded}};
}

}  // namespace clumplab

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clumplab/canonical.hpp"
#include "clumplab/certify.hpp"
#include "clumplab/clump_graph.hpp"
#include "clumplab/lp.hpp"
#include "clumplab/search.hpp"
#include "clumplab/sieve.hpp"

namespace clumplab {

// Malformed input. `where` is "line L, column C" for syntax errors and a field path
// such as "layers[2][0].weight" for schema errors.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(std::string where, const std::string& message)
      : std::invalid_argument(where + ": " + message), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// {"k": int, "layers": [[{"color": int, "weight": int}, ...], ...], "rooted": bool?}
// Weights may also be decimal strings. Throws SchemaError or ValidationError.
WeightedClumpGraph parse_clump_json(std::string_view text);
// Canonical text: colors sorted, one layer per line, trailing newline.
std::string serialize_clump_json(const WeightedClumpGraph& h);

nlohmann::json rational_json(const Rational& q);
nlohmann::json integer_json(const Integer& z);

// {"u": [{"layer": i, "color": c, "value": "p/q"}, ...]} mapped onto h's clumps;
// clumps that are not listed get weight 0.
std::vector<Rational> parse_weights_json(std::string_view text, const WeightedClumpGraph& h);

nlohmann::json certificate_json(const WeightedClumpGraph& h, const DualCertificate& cert);
nlohmann::json packing_json(const PackingReport& report);
nlohmann::json transform_log_json(const TransformLog& log);
nlohmann::json canonical_report_json(const CanonicalReport& report);
nlohmann::json sieve_report_json(const SieveReport& report);
nlohmann::json global_stats_json(const GlobalStats& stats);
nlohmann::json constraint_json(const ConstraintCheck& check);
nlohmann::json lp_solution_json(const LPSolution& solution);
nlohmann::json search_result_json(const SearchResult& result);

std::string_view status_name(LPStatus status);

}  // namespace clumplab

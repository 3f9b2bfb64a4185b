#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "clumplab/constructions.hpp"
#include "clumplab/io.hpp"

using namespace clumplab;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string where_of(const std::string& text) {
  try {
    parse_clump_json(text);
  } catch (const SchemaError& e) {
    return e.where();
  }
  return "";
}

}  // namespace

TEST(Json, CorpusFilesRoundTrip) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(CLUMPLAB_TEST_DATA)) {
    if (entry.path().extension() != ".json") continue;
    const WeightedClumpGraph h = parse_clump_json(slurp(entry.path()));
    const std::string canonical = serialize_clump_json(h);
    EXPECT_EQ(parse_clump_json(canonical), h) << entry.path();
    EXPECT_EQ(serialize_clump_json(parse_clump_json(canonical)), canonical);
    ++files;
  }
  EXPECT_GE(files, 3u);
}

TEST(Json, FixtureMatchesGenerator) {
  const auto h = parse_clump_json(slurp(std::filesystem::path(CLUMPLAB_TEST_DATA) / "figure_block.json"));
  EXPECT_EQ(h, counterexample_graph(1, Integer(4), 1));
}

TEST(Json, BigWeightsAndUnrooted) {
  const auto h = parse_clump_json(slurp(std::filesystem::path(CLUMPLAB_TEST_DATA) / "unrooted_pair.json"));
  EXPECT_FALSE(h.rooted());
  EXPECT_EQ(h.clump(0).weight, Integer("12345678901234567890"));
  EXPECT_NE(serialize_clump_json(h).find("\"12345678901234567890\""), std::string::npos);
}

TEST(Json, SchemaDiagnosticsNameTheField) {
  EXPECT_EQ(where_of(R"({"k": 3, "layers": [[{"color": 0, "weight": 1}], [{"color": 1}]]})"), "layers[1][0].weight");
  EXPECT_EQ(where_of(R"({"layers": []})"), "k");
  EXPECT_EQ(where_of(R"({"k": 3, "layers": [[{"color": "red", "weight": 1}]]})"), "layers[0][0].color");
  EXPECT_EQ(where_of(R"({"k": 3, "layers": [[{"color": 0, "weight": 1.5}]]})"), "layers[0][0].weight");
  EXPECT_EQ(where_of("{\"k\": 3,\n  \"layers\": [}"), "line 2, column 14");
  EXPECT_THROW(parse_clump_json(R"({"k": 1, "layers": [[{"color": 0, "weight": 1}]]})"), ValidationError);
}

TEST(Json, SerializationIsStable) {
  const auto h = counterexample_graph(1, Integer(4), 1);
  EXPECT_EQ(serialize_clump_json(h).substr(0, 40), "{\"k\": 3, \"layers\": [\n  [{\"color\": 0, \"we");
  EXPECT_EQ(serialize_clump_json(h), serialize_clump_json(parse_clump_json(serialize_clump_json(h))));
}

TEST(Json, WeightsAndCertificate) {
  const auto h = counterexample_graph(1, Integer(4), 1);
  const DualCertificate cert = dual_certificate(h);
  const std::string text = certificate_json(h, cert).dump();
  const std::vector<Rational> u = parse_weights_json(text, h);
  EXPECT_EQ(u, cert.u);
  EXPECT_THROW(parse_weights_json(R"({"u": [{"layer": 9, "color": 0, "value": "1/2"}]})", h), SchemaError);
  EXPECT_THROW(parse_weights_json(R"({"u": [{"layer": 0, "color": 0, "value": "x"}]})", h), SchemaError);
  EXPECT_EQ(rational_json(make_rational(-6, 4)).get<std::string>(), "-3/2");
}

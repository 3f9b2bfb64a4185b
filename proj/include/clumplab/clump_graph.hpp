#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clumplab/rational.hpp"

namespace clumplab {

struct ColorId {
  std::uint32_t index = 0;
  auto operator<=>(const ColorId&) const = default;
};

// Bit c is set when color c is present. Limits k to 64.
using ColorSet = std::uint64_t;
inline constexpr std::size_t kMaxColors = 64;

inline ColorSet color_bit(ColorId c) { return ColorSet{1} << c.index; }
inline bool contains(ColorSet set, ColorId c) { return (set & color_bit(c)) != 0; }
std::size_t color_count(ColorSet set);
// Least color index in [0, k) missing from `set`, if any.
std::optional<ColorId> first_missing_color(ColorSet set, std::size_t k);
std::vector<ColorId> colors_in(ColorSet set);

// Flat index into WeightedClumpGraph::clumps(), ordered by layer and then color.
using ClumpId = std::size_t;

struct Clump {
  std::size_t layer = 0;
  ColorId color;
  Integer weight;
  bool operator==(const Clump&) const = default;
};

struct LayerEntry {
  ColorId color;
  Integer weight;
  bool operator==(const LayerEntry&) const = default;
};
using LayerSpec = std::vector<LayerEntry>;

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WeightedClumpGraph {
 public:
  std::size_t k() const { return k_; }
  bool rooted() const { return rooted_; }
  std::size_t layer_count() const { return offsets_.size() - 1; }
  std::size_t depth() const { return layer_count() - 1; }
  std::size_t size() const { return clumps_.size(); }

  std::span<const Clump> clumps() const { return clumps_; }
  const Clump& clump(ClumpId id) const;
  std::span<const Clump> layer(std::size_t i) const;
  ClumpId layer_begin(std::size_t i) const { return offsets_.at(i); }
  ClumpId layer_end(std::size_t i) const { return offsets_.at(i + 1); }
  std::size_t clump_count(std::size_t i) const { return layer(i).size(); }
  ColorSet layer_colors(std::size_t i) const;
  Integer layer_weight(std::size_t i) const;
  Integer total_weight() const;

  std::optional<ClumpId> find(std::size_t layer, ColorId color) const;
  bool adjacent(ClumpId a, ClumpId b) const;
  std::vector<ClumpId> neighbors(ClumpId id) const;

  std::vector<LayerSpec> layer_specs() const;

  bool operator==(const WeightedClumpGraph&) const = default;

 private:
  friend WeightedClumpGraph make_clump_graph(std::size_t, std::vector<LayerSpec>, bool);
  std::size_t k_ = 0;
  bool rooted_ = true;
  std::vector<Clump> clumps_;
  std::vector<std::size_t> offsets_;
};

// Validates and normalizes (each layer sorted by color). Throws ValidationError.
WeightedClumpGraph make_clump_graph(std::size_t k, std::vector<LayerSpec> layers,
                                    bool rooted = true);

Integer weighted_degree(const WeightedClumpGraph& h, ClumpId v);
std::vector<Integer> weighted_degrees(const WeightedClumpGraph& h);
Integer min_weighted_degree(const WeightedClumpGraph& h);

struct SimpleGraph {
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t order() const { return adjacency.size(); }
  std::size_t edge_count() const;
};

SimpleGraph blow_up(const WeightedClumpGraph& h);
// Color of every blown-up vertex, in blow_up's vertex order.
std::vector<ColorId> blow_up_coloring(const WeightedClumpGraph& h);
// First blown-up vertex of every clump, plus a trailing total.
std::vector<std::size_t> blow_up_offsets(const WeightedClumpGraph& h);

inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source);
std::size_t eccentricity(const SimpleGraph& g, std::size_t v);
// Throws std::invalid_argument when g is empty or disconnected.
std::size_t diameter(const SimpleGraph& g);

// "n m" header followed by one "u v" line per edge with u < v, sorted.
std::string edge_list(const SimpleGraph& g);

struct LayerProfile {
  std::size_t k = 0;
  std::size_t depth = 0;
  Integer n;
  std::vector<Integer> ell;
  std::vector<std::size_t> count;
  std::vector<ColorSet> colors;

  // ℓ_i with ℓ_i = 0 outside 0..D.
  Integer ell_at(long long i) const;
  std::size_t count_at(long long i) const;
  bool single(long long i) const { return count_at(i) == 1; }
};

LayerProfile layer_profile(const WeightedClumpGraph& h);

}  // namespace clumplab

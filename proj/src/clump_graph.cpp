#include "clumplab/clump_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace clumplab {

std::size_t color_count(ColorSet set) { return static_cast<std::size_t>(std::popcount(set)); }

std::optional<ColorId> first_missing_color(ColorSet set, std::size_t k) {
  for (std::uint32_t c = 0; c < k; ++c) {
    if (!contains(set, ColorId{c})) return ColorId{c};
  }
  return std::nullopt;
}

std::vector<ColorId> colors_in(ColorSet set) {
  std::vector<ColorId> out;
  for (std::uint32_t c = 0; c < kMaxColors; ++c) {
    if (contains(set, ColorId{c})) out.push_back(ColorId{c});
  }
  return out;
}

const Clump& WeightedClumpGraph::clump(ClumpId id) const {
  if (id >= clumps_.size()) {
    throw std::out_of_range("unknown clump id " + std::to_string(id));
  }
  return clumps_[id];
}

std::span<const Clump> WeightedClumpGraph::layer(std::size_t i) const {
  if (i >= layer_count()) throw std::out_of_range("layer index " + std::to_string(i));
  return std::span<const Clump>(clumps_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

ColorSet WeightedClumpGraph::layer_colors(std::size_t i) const {
  ColorSet set = 0;
  for (const Clump& c : layer(i)) set |= color_bit(c.color);
  return set;
}

Integer WeightedClumpGraph::layer_weight(std::size_t i) const {
  Integer total = 0;
  for (const Clump& c : layer(i)) total += c.weight;
  return total;
}

Integer WeightedClumpGraph::total_weight() const {
  Integer total = 0;
  for (const Clump& c : clumps_) total += c.weight;
  return total;
}

std::optional<ClumpId> WeightedClumpGraph::find(std::size_t layer_index, ColorId color) const {
  if (layer_index >= layer_count()) return std::nullopt;
  for (ClumpId id = offsets_[layer_index]; id < offsets_[layer_index + 1]; ++id) {
    if (clumps_[id].color == color) return id;
  }
  return std::nullopt;
}

bool WeightedClumpGraph::adjacent(ClumpId a, ClumpId b) const {
  const Clump& x = clump(a);
  const Clump& y = clump(b);
  const std::size_t gap = x.layer > y.layer ? x.layer - y.layer : y.layer - x.layer;
  return a != b && gap <= 1 && x.color != y.color;
}

std::vector<ClumpId> WeightedClumpGraph::neighbors(ClumpId id) const {
  const Clump& x = clump(id);
  const std::size_t lo = x.layer == 0 ? 0 : x.layer - 1;
  const std::size_t hi = std::min(x.layer + 1, depth());
  std::vector<ClumpId> out;
  for (ClumpId other = offsets_[lo]; other < offsets_[hi + 1]; ++other) {
    if (other != id && clumps_[other].color != x.color) out.push_back(other);
  }
  return out;
}

std::vector<LayerSpec> WeightedClumpGraph::layer_specs() const {
  std::vector<LayerSpec> out(layer_count());
  for (const Clump& c : clumps_) out[c.layer].push_back({c.color, c.weight});
  return out;
}

WeightedClumpGraph make_clump_graph(std::size_t k, std::vector<LayerSpec> layers, bool rooted) {
  if (k < 2) throw ValidationError("k must be at least 2, got " + std::to_string(k));
  if (k > kMaxColors) {
    throw ValidationError("k must be at most " + std::to_string(kMaxColors));
  }
  if (layers.empty()) throw ValidationError("a clump graph needs at least one layer");

  WeightedClumpGraph h;
  h.k_ = k;
  h.rooted_ = rooted;
  h.offsets_.push_back(0);
  ColorSet previous = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    LayerSpec& layer = layers[i];
    const std::string where = "layer " + std::to_string(i);
    if (layer.empty()) throw ValidationError(where + " is empty");
    std::sort(layer.begin(), layer.end(),
              [](const LayerEntry& a, const LayerEntry& b) { return a.color < b.color; });
    ColorSet present = 0;
    for (const LayerEntry& e : layer) {
      if (e.color.index >= k) {
        throw ValidationError(where + ": color " + std::to_string(e.color.index) +
                              " out of range for k = " + std::to_string(k));
      }
      if (contains(present, e.color)) {
        throw ValidationError(where + ": duplicate color " + std::to_string(e.color.index));
      }
      if (e.weight < 1) {
        throw ValidationError(where + ": color " + std::to_string(e.color.index) +
                              " has weight " + e.weight.str() + " < 1");
      }
      if (i > 0 && (previous & ~color_bit(e.color)) == 0) {
        throw ValidationError(where + ": clump of color " + std::to_string(e.color.index) +
                              " has no differently-colored clump in layer " +
                              std::to_string(i - 1));
      }
      present |= color_bit(e.color);
      h.clumps_.push_back(Clump{i, e.color, e.weight});
    }
    previous = present;
    h.offsets_.push_back(h.clumps_.size());
  }
  if (rooted && (layers[0].size() != 1 || layers[0][0].weight != 1)) {
    throw ValidationError("a rooted graph needs a single weight-1 clump in layer 0");
  }
  return h;
}

Integer weighted_degree(const WeightedClumpGraph& h, ClumpId v) {
  Integer total = 0;
  for (ClumpId u : h.neighbors(v)) total += h.clump(u).weight;
  return total;
}

std::vector<Integer> weighted_degrees(const WeightedClumpGraph& h) {
  std::vector<Integer> out;
  out.reserve(h.size());
  for (ClumpId v = 0; v < h.size(); ++v) out.push_back(weighted_degree(h, v));
  return out;
}

Integer min_weighted_degree(const WeightedClumpGraph& h) {
  const auto degrees = weighted_degrees(h);
  return *std::min_element(degrees.begin(), degrees.end());
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adjacency) twice += nbrs.size();
  return twice / 2;
}

std::vector<std::size_t> blow_up_offsets(const WeightedClumpGraph& h) {
  std::vector<std::size_t> offsets{0};
  for (const Clump& c : h.clumps()) {
    offsets.push_back(offsets.back() + c.weight.convert_to<std::size_t>());
  }
  return offsets;
}

SimpleGraph blow_up(const WeightedClumpGraph& h) {
  const auto offsets = blow_up_offsets(h);
  SimpleGraph g;
  g.adjacency.resize(offsets.back());
  for (ClumpId c = 0; c < h.size(); ++c) {
    std::vector<std::size_t> nbrs;
    for (ClumpId u : h.neighbors(c)) {
      for (std::size_t v = offsets[u]; v < offsets[u + 1]; ++v) nbrs.push_back(v);
    }
    for (std::size_t v = offsets[c]; v < offsets[c + 1]; ++v) g.adjacency[v] = nbrs;
  }
  return g;
}

std::vector<ColorId> blow_up_coloring(const WeightedClumpGraph& h) {
  std::vector<ColorId> out;
  for (const Clump& c : h.clumps()) {
    out.insert(out.end(), c.weight.convert_to<std::size_t>(), c.color);
  }
  return out;
}

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::vector<std::size_t> queue{source};
  dist.at(source) = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t v = queue[head];
    for (std::size_t u : g.adjacency[v]) {
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

std::size_t eccentricity(const SimpleGraph& g, std::size_t v) {
  std::size_t ecc = 0;
  for (std::size_t d : bfs_distances(g, v)) {
    if (d == kUnreachable) throw std::invalid_argument("graph is disconnected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

std::size_t diameter(const SimpleGraph& g) {
  if (g.order() == 0) throw std::invalid_argument("diameter of the empty graph");
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.order(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

std::string edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v : g.adjacency[u]) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  return out.str();
}

Integer LayerProfile::ell_at(long long i) const {
  if (i < 0 || i > static_cast<long long>(depth)) return 0;
  return ell[static_cast<std::size_t>(i)];
}

std::size_t LayerProfile::count_at(long long i) const {
  if (i < 0 || i > static_cast<long long>(depth)) return 0;
  return count[static_cast<std::size_t>(i)];
}

LayerProfile layer_profile(const WeightedClumpGraph& h) {
  LayerProfile p;
  p.k = h.k();
  p.depth = h.depth();
  p.n = 0;
  for (std::size_t i = 0; i < h.layer_count(); ++i) {
    p.ell.push_back(h.layer_weight(i));
    p.count.push_back(h.clump_count(i));
    p.colors.push_back(h.layer_colors(i));
    p.n += p.ell.back();
  }
  return p;
}

}  // namespace clumplab

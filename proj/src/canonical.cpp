#include "clumplab/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace clumplab {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::color_switch: return "color-switch";
    case Rule::move_x_clump: return "move-X-clump";
    case Rule::fold_y_back: return "fold-y-back";
    case Rule::trade_x_for_y: return "trade-x-for-y";
    case Rule::collapse_to_x: return "collapse-to-x";
    case Rule::fold_z_back: return "fold-z-back";
    case Rule::recolor_duplicate: return "recolor-duplicate";
  }
  return "unknown";
}

namespace {

// (c(i), c(i+1), shared) for the seven admissible three-color pairs.
const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::string_view>&
pattern_table() {
  static const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::string_view>
      table{{{1, 1, 0}, "X|Y"},     {{1, 2, 0}, "X|YZ"},    {{2, 1, 0}, "YZ|X"},
            {{2, 2, 1}, "XY|XZ"},   {{2, 3, 2}, "XY|XYZ"},  {{3, 2, 2}, "XYZ|XY"},
            {{3, 3, 3}, "XYZ|XYZ"}};
  return table;
}

std::size_t count_or_zero(const WeightedClumpGraph& h, long long i) {
  if (i < 0 || i > static_cast<long long>(h.depth())) return 0;
  return h.clump_count(static_cast<std::size_t>(i));
}

class Workspace {
 public:
  Workspace(const WeightedClumpGraph& h) : k_(h.k()), layers_(h.layer_specs()) {}

  std::size_t k() const { return k_; }
  std::size_t depth() const { return layers_.size() - 1; }
  const std::vector<LayerSpec>& layers() const { return layers_; }

  ColorSet colors(long long i) const {
    if (i < 0 || i > static_cast<long long>(depth())) return 0;
    ColorSet set = 0;
    for (const LayerEntry& e : layers_[static_cast<std::size_t>(i)]) set |= color_bit(e.color);
    return set;
  }
  std::size_t count(long long i) const { return color_count(colors(i)); }

  Integer weight(std::size_t i, ColorId c) const {
    for (const LayerEntry& e : layers_[i]) {
      if (e.color == c) return e.weight;
    }
    return 0;
  }

  void set(std::size_t i, ColorId c, const Integer& w) {
    LayerSpec& layer = layers_[i];
    auto it = std::find_if(layer.begin(), layer.end(), [&](const LayerEntry& e) { return e.color == c; });
    if (it != layer.end()) layer.erase(it);
    if (w > 0) {
      auto pos = std::find_if(layer.begin(), layer.end(), [&](const LayerEntry& e) { return c < e.color; });
      layer.insert(pos, LayerEntry{c, w});
    }
  }

  void replace_layer(std::size_t i, LayerSpec spec) {
    std::sort(spec.begin(), spec.end(), [](const LayerEntry& a, const LayerEntry& b) { return a.color < b.color; });
    layers_[i] = std::move(spec);
  }

  void swap_colors(ColorId a, ColorId b, std::size_t first, std::size_t last) {
    for (std::size_t j = first; j <= last && j <= depth(); ++j) {
      for (LayerEntry& e : layers_[j]) {
        if (e.color == a) {
          e.color = b;
        } else if (e.color == b) {
          e.color = a;
        }
      }
      replace_layer(j, layers_[j]);
    }
  }

  std::vector<LayerSpec> window(std::size_t first, std::size_t last) const {
    last = std::min(last, depth());
    return {layers_.begin() + static_cast<long>(first), layers_.begin() + static_cast<long>(last) + 1};
  }

  WeightedClumpGraph build() const { return make_clump_graph(k_, layers_, true); }

 private:
  std::size_t k_;
  std::vector<LayerSpec> layers_;
};

std::optional<ColorId> least_color(ColorSet set) {
  for (ColorId c : colors_in(set)) return c;
  return std::nullopt;
}

std::optional<std::size_t> first_pair_violation(const Workspace& w) {
  for (std::size_t i = 0; i < w.depth(); ++i) {
    const std::size_t want = std::min(w.k(), w.count(i) + w.count(i + 1));
    if (color_count(w.colors(i) | w.colors(i + 1)) != want) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> first_full_layer_violation(const Workspace& w) {
  for (std::size_t i = 0; i < w.depth(); ++i) {
    if (w.count(i) == w.k() && (i < 2 || w.count(i + 1) < 2)) return i;
  }
  return std::nullopt;
}

bool has_heavy_clump(const LayerSpec& layer) {
  return std::any_of(layer.begin(), layer.end(), [](const LayerEntry& e) { return e.weight > 1; });
}

std::optional<std::size_t> first_duplicate_violation(const Workspace& w) {
  for (std::size_t i = 0; i <= w.depth(); ++i) {
    if (!has_heavy_clump(w.layers()[i])) continue;
    const long long li = static_cast<long long>(i);
    if (i == 0 || w.count(li) + std::max(w.count(li - 1), w.count(li + 1)) < w.k()) return i;
  }
  return std::nullopt;
}

struct Step {
  Rule rule;
  std::size_t layer;
  std::size_t window_first;
  std::size_t window_last;
  std::optional<ColorSwap> swap;
};

class Rewriter {
 public:
  Rewriter(const WeightedClumpGraph& h, const Integer& delta)
      : work_(h), n_(h.total_weight()), layer_count_(h.layer_count()),
        floor_degree_(min_weighted_degree(h)), cap_(canonicalize_cap(h)) {
    if (floor_degree_ < delta) {
      throw std::invalid_argument("input minimum weighted degree " + floor_degree_.str() +
                                  " is below delta = " + delta.str());
    }
  }

  Workspace& work() { return work_; }
  TransformLog& log() { return log_; }

  template <class Mutation>
  void apply(Step step, Mutation&& mutate) {
    if (log_.size() >= cap_) {
      throw CanonicalizationError("rewrite cap of " + std::to_string(cap_) + " exceeded", log_);
    }
    TransformEntry entry;
    entry.rule = step.rule;
    entry.layer = step.layer;
    entry.window_first = step.window_first;
    entry.before = work_.window(step.window_first, step.window_last);
    entry.swap = step.swap;
    mutate(work_);
    entry.after = work_.window(step.window_first, step.window_last);
    log_.entries.push_back(std::move(entry));
    audit();
  }

 private:
  void audit() const {
    const std::string where = "after " + std::string(rule_name(log_.entries.back().rule)) +
                              " at layer " + std::to_string(log_.entries.back().layer);
    WeightedClumpGraph g = [&] {
      try {
        return work_.build();
      } catch (const ValidationError& e) {
        throw std::logic_error(where + ": invalid layering: " + e.what());
      }
    }();
    if (g.total_weight() != n_ || g.layer_count() != layer_count_) {
      throw std::logic_error(where + ": order or depth changed");
    }
    if (min_weighted_degree(g) < floor_degree_) {
      throw std::logic_error(where + ": minimum weighted degree decreased");
    }
  }

  Workspace work_;
  Integer n_;
  std::size_t layer_count_;
  Integer floor_degree_;
  std::size_t cap_;
  TransformLog log_;
};

void fix_pair(Rewriter& rw, std::size_t i) {
  Workspace& w = rw.work();
  const ColorId x = *least_color(w.colors(i) & w.colors(i + 1));
  const ColorId y = *first_missing_color(w.colors(i) | w.colors(i + 1), w.k());
  const ColorSwap swap{x, y, i + 1, w.depth()};
  rw.apply({Rule::color_switch, i, i, i + 1, swap},
           [&](Workspace& ws) { ws.swap_colors(x, y, i + 1, ws.depth()); });
}

// One step towards clearing c(i) = k with c(i+1) = 1.
void fix_full_layer(Rewriter& rw, std::size_t i) {
  Workspace& w = rw.work();
  const std::size_t k = w.k();
  const ColorId x = *least_color(w.colors(i + 1));

  if ((w.colors(i - 2) & ~color_bit(x)) != 0) {
    rw.apply({Rule::move_x_clump, i, i - 1, i, std::nullopt}, [&](Workspace& ws) {
      const Integer moved = ws.weight(i, x);
      ws.set(i - 1, x, ws.weight(i - 1, x) + moved);
      ws.set(i, x, 0);
    });
    return;
  }
  const ColorSet below = w.colors(i - 2) | w.colors(i - 1);
  if (color_count(below) < k) {
    const ColorId y = *first_missing_color(below, k);
    const ColorSwap swap{x, y, 0, i - 2};
    rw.apply({Rule::color_switch, i, 0, i - 2, swap},
             [&](Workspace& ws) { ws.swap_colors(x, y, 0, i - 2); });
    return;
  }
  if (k != 3) {
    throw CanonicalizationError("layer " + std::to_string(i) +
                                    ": full-layer violation needs the three-color weight cases, "
                                    "available only for k = 3",
                                rw.log());
  }

  const std::vector<ColorId> others = colors_in(w.colors(i - 1));
  if (others.size() != 2 || contains(w.colors(i - 1), x)) {
    throw std::invalid_argument("layer " + std::to_string(i) +
                                ": the weight cases need property (ii) at layers i-2, i-1");
  }
  ColorId y = others.at(0);
  ColorId z = others.at(1);
  auto wt = [&](std::size_t layer, ColorId c) { return w.weight(layer, c); };
  const Integer x3 = wt(i, x);

  Rule rule;
  if (x3 >= wt(i, y) || x3 >= wt(i, z)) {
    rule = Rule::fold_y_back;
    if (x3 < wt(i, y)) std::swap(y, z);
  } else if (x3 >= wt(i - 1, y) || x3 >= wt(i - 1, z)) {
    rule = Rule::trade_x_for_y;
    if (x3 < wt(i - 1, y)) std::swap(y, z);
  } else if (wt(i - 1, z) >= wt(i, y)) {
    rule = Rule::collapse_to_x;
  } else {
    rule = Rule::fold_z_back;
  }

  const Integer y2 = wt(i - 1, y), z2 = wt(i - 1, z);
  const Integer y3 = wt(i, y), z3 = wt(i, z), x4 = wt(i + 1, x);
  LayerSpec prev, mid;
  switch (rule) {
    case Rule::fold_y_back:
      prev = {{y, y2 + y3}, {z, z2}};
      mid = {{x, x3}, {z, z3}};
      break;
    case Rule::trade_x_for_y:
      prev = {{y, x3}, {z, z2}};
      mid = {{x, y3 + y2}, {z, z3}};
      break;
    case Rule::collapse_to_x:
      prev = {{y, y2 + x3}, {z, z2}};
      mid = {{x, y3 + z3}};
      break;
    default:
      prev = {{y, y2 + z2}};
      mid = {{x, y3 + x3}, {z, z3}};
      break;
  }
  const ColorSwap swap{x, y, i + 2, w.depth()};
  rw.apply({rule, i, i - 2, i + 1, swap}, [&](Workspace& ws) {
    ws.replace_layer(i - 1, prev);
    ws.replace_layer(i, mid);
    ws.replace_layer(i + 1, {{y, x4}});
    ws.swap_colors(x, y, i + 2, ws.depth());
  });
}

void fix_duplicate(Rewriter& rw, std::size_t i) {
  Workspace& w = rw.work();
  const std::size_t k = w.k();
  const long long li = static_cast<long long>(i);
  const ColorSet around = w.colors(li - 1) | w.colors(li) | w.colors(li + 1);
  if (color_count(around) == k) {
    const ColorId x = *first_missing_color(w.colors(li - 1) | w.colors(li), k);
    const ColorId y = *first_missing_color(w.colors(li) | w.colors(li + 1), k);
    const ColorSwap swap{x, y, i + 1, w.depth()};
    rw.apply({Rule::color_switch, i, i, std::min(i + 1, w.depth()), swap},
             [&](Workspace& ws) { ws.swap_colors(x, y, i + 1, ws.depth()); });
    return;
  }
  const ColorId fresh = *first_missing_color(around, k);
  const LayerSpec& layer = w.layers()[i];
  const ColorId source =
      std::find_if(layer.begin(), layer.end(), [](const LayerEntry& e) { return e.weight > 1; })->color;
  rw.apply({Rule::recolor_duplicate, i, i, i, std::nullopt}, [&](Workspace& ws) {
    ws.set(i, source, ws.weight(i, source) - 1);
    ws.set(i, fresh, 1);
  });
}

}  // namespace

std::string pattern_name(ColorSet a, ColorSet b) {
  const auto key = std::make_tuple(color_count(a), color_count(b), color_count(a & b));
  const auto& table = pattern_table();
  if (auto it = table.find(key); it != table.end()) return std::string(it->second);
  std::map<std::uint32_t, char> letter;
  auto name = [&](ColorSet set) {
    std::string out;
    for (ColorId c : colors_in(set)) {
      const auto it = letter.try_emplace(c.index, static_cast<char>('X' + letter.size())).first;
      out.push_back(it->second);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::string left = name(a);
  return left + "|" + name(b);
}

bool is_three_color_pattern(ColorSet a, ColorSet b) {
  return pattern_table().count(std::make_tuple(color_count(a), color_count(b), color_count(a & b))) > 0;
}

CanonicalReport check_canonical(const WeightedClumpGraph& h, const Integer& delta) {
  CanonicalReport report;
  const std::size_t k = h.k();
  const std::size_t depth = h.depth();
  for (std::size_t i = 0; i <= depth; ++i) {
    const long long li = static_cast<long long>(i);
    const std::size_t c = h.clump_count(i);
    std::array<bool, 4> f{true, true, true, true};
    if (i < depth) {
      const std::size_t next = h.clump_count(i + 1);
      f[0] = c != 1 || next <= k - 1;
      f[1] = color_count(h.layer_colors(i) | h.layer_colors(i + 1)) == std::min(k, c + next);
      f[2] = c != k || (i >= 2 && next >= 2);
    }
    const bool heavy = std::any_of(h.layer(i).begin(), h.layer(i).end(),
                                   [](const Clump& x) { return x.weight > 1; });
    if (heavy) {
      f[3] = i > 0 && c + std::max(count_or_zero(h, li - 1), count_or_zero(h, li + 1)) >= k;
    }
    for (int p = 0; p < 4; ++p) {
      if (!f[static_cast<std::size_t>(p)]) report.violations.push_back({i, p + 1});
    }
    report.flags.push_back(f);
  }
  if (k == 3) {
    report.patterns_checked = true;
    for (std::size_t i = 0; i < depth; ++i) {
      if (!is_three_color_pattern(h.layer_colors(i), h.layer_colors(i + 1))) {
        report.pattern_failures.push_back(i);
      }
    }
  }
  report.min_degree_ok = min_weighted_degree(h) >= delta;
  return report;
}

std::size_t canonicalize_cap(const WeightedClumpGraph& h) { return 4 * (h.depth() + 1) * h.k(); }

CanonicalResult canonicalize(const WeightedClumpGraph& h, const Integer& delta) {
  if (!h.rooted()) throw std::invalid_argument("canonicalize needs a rooted clump graph");
  Rewriter rw(h, delta);
  while (true) {
    if (auto i = first_pair_violation(rw.work())) {
      fix_pair(rw, *i);
    } else if (auto j = first_full_layer_violation(rw.work())) {
      fix_full_layer(rw, *j);
    } else if (auto m = first_duplicate_violation(rw.work())) {
      fix_duplicate(rw, *m);
    } else {
      break;
    }
  }
  return {rw.work().build(), rw.log()};
}

CanonicalResult resolve_k1_violation(const WeightedClumpGraph& h, std::size_t i,
                                     const Integer& delta) {
  if (i + 1 > h.depth() || h.clump_count(i) != h.k() || h.clump_count(i + 1) != 1 || i < 2) {
    throw std::invalid_argument("resolve_k1_violation needs c(i) = k, c(i+1) = 1 at layer " +
                                std::to_string(i));
  }
  Rewriter rw(h, delta);
  while (rw.work().count(static_cast<long long>(i)) == h.k()) fix_full_layer(rw, i);
  return {rw.work().build(), rw.log()};
}

WeightedClumpGraph bfs_relayer(const SimpleGraph& g, const std::vector<ColorId>& coloring,
                               std::size_t k, std::optional<std::size_t> root) {
  if (coloring.size() != g.order()) {
    throw std::invalid_argument("coloring has " + std::to_string(coloring.size()) +
                                " entries for " + std::to_string(g.order()) + " vertices");
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (coloring[v].index >= k) throw std::invalid_argument("color out of range at vertex " + std::to_string(v));
    for (std::size_t u : g.adjacency[v]) {
      if (coloring[u] == coloring[v]) {
        throw std::invalid_argument("improper coloring on edge " + std::to_string(v) + "-" +
                                    std::to_string(u));
      }
    }
  }
  std::size_t x = 0;
  if (root) {
    x = *root;
  } else {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      const std::size_t ecc = eccentricity(g, v);
      if (v == 0 || ecc > best) {
        best = ecc;
        x = v;
      }
    }
  }
  const auto dist = bfs_distances(g, x);
  std::size_t depth = 0;
  for (std::size_t d : dist) {
    if (d == kUnreachable) throw std::invalid_argument("graph is disconnected");
    depth = std::max(depth, d);
  }
  std::vector<std::map<std::uint32_t, Integer>> grouped(depth + 1);
  for (std::size_t v = 0; v < g.order(); ++v) grouped[dist[v]][coloring[v].index] += 1;
  std::vector<LayerSpec> layers;
  for (const auto& layer : grouped) {
    LayerSpec spec;
    for (const auto& [color, weight] : layer) spec.push_back({ColorId{color}, weight});
    layers.push_back(std::move(spec));
  }
  return make_clump_graph(k, std::move(layers), true);
}

}  // namespace clumplab

#include "clumplab/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <stdexcept>
#include <thread>

#include "clumplab/canonical.hpp"
#include "clumplab/constructions.hpp"
#include "clumplab/lp.hpp"

namespace clumplab {

namespace {

ColorSet swap12(ColorSet s) {
  const ColorSet b1 = (s >> 1) & 1, b2 = (s >> 2) & 1;
  return (s & 1) | (b2 << 1) | (b1 << 2);
}

bool admissible_step(std::size_t i, ColorSet prev, ColorSet next) {
  if (!is_three_color_pattern(prev, next)) return false;
  const std::size_t c = color_count(prev), c_next = color_count(next);
  if (c == 1 && c_next > 2) return false;
  if (color_count(prev | next) != std::min<std::size_t>(3, c + c_next)) return false;
  if (c == 3 && (i < 2 || c_next < 2)) return false;
  return true;
}

struct Outcome {
  std::optional<Integer> order;
  std::optional<std::size_t> diameter;
  std::vector<Integer> weights;
};

Outcome solve_topology(const PatternSequence& pattern, const Integer& delta) {
  Outcome out;
  const WeightedClumpGraph topo = pattern_topology(pattern);
  const MinOrderResult r = min_order_lp(topo, delta);
  if (!r.int_value) return out;
  out.order = r.int_value;
  out.weights = r.int_weights;
  out.diameter = diameter(blow_up(with_weights(topo, r.int_weights)));
  return out;
}

}  // namespace

std::vector<PatternSequence> canonical_pattern_sequences(std::size_t depth) {
  std::vector<PatternSequence> out;
  std::set<PatternSequence> seen;
  PatternSequence seq{ColorSet{1}};
  auto recurse = [&](auto&& self) -> void {
    const std::size_t i = seq.size() - 1;
    if (i == depth) {
      PatternSequence mirrored(seq);
      for (ColorSet& s : mirrored) s = swap12(s);
      const PatternSequence& rep = std::min(seq, mirrored);
      if (seen.insert(rep).second) out.push_back(rep);
      return;
    }
    for (ColorSet next = 1; next < 8; ++next) {
      if (!admissible_step(i, seq[i], next)) continue;
      seq.push_back(next);
      self(self);
      seq.pop_back();
    }
  };
  recurse(recurse);
  std::sort(out.begin(), out.end());
  return out;
}

WeightedClumpGraph pattern_topology(const PatternSequence& pattern) {
  std::vector<LayerSpec> layers;
  for (ColorSet s : pattern) {
    LayerSpec layer;
    for (ColorId c : colors_in(s)) layer.push_back({c, Integer(1)});
    layers.push_back(std::move(layer));
  }
  return make_clump_graph(3, std::move(layers), true);
}

SearchResult extremal_search(std::size_t k, const Integer& delta, std::size_t max_depth,
                             std::size_t budget, std::size_t threads) {
  if (k != 3) throw std::invalid_argument("extremal_search supports k = 3 only");
  if (delta < 1) throw std::invalid_argument("extremal_search needs delta >= 1");
  std::vector<PatternSequence> work;
  SearchResult result;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    for (PatternSequence& p : canonical_pattern_sequences(d)) {
      if (work.size() == budget) {
        result.budget_exceeded = true;
        break;
      }
      work.push_back(std::move(p));
    }
    if (result.budget_exceeded) break;
  }

  std::vector<Outcome> outcomes(work.size());
  std::vector<std::exception_ptr> errors(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        outcomes[i] = solve_topology(work[i], delta);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t pool = std::max<std::size_t>(1, std::min(threads, work.size()));
  std::vector<std::thread> threads_v;
  for (std::size_t t = 1; t < pool; ++t) threads_v.emplace_back(worker);
  worker();
  for (std::thread& t : threads_v) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  result.topologies = work.size();
  result.best_phi = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (!o.order) continue;
    const std::size_t d = work[i].size() - 1;
    if (*o.diameter != d) continue;
    auto it = result.frontier.find(d);
    if (it != result.frontier.end() && it->second.min_order <= *o.order) continue;
    FrontierEntry e{d, *o.order, work[i], with_weights(pattern_topology(work[i]), o.weights),
                    normalized_diameter(d, delta, *o.order)};
    result.frontier.insert_or_assign(d, std::move(e));
  }
  for (const auto& [d, e] : result.frontier) {
    if (e.phi > result.best_phi) result.best_phi = e.phi;
  }
  return result;
}

}  // namespace clumplab

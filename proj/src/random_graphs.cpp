#include "clumplab/random_graphs.hpp"

#include <stdexcept>

#include "clumplab/canonical.hpp"

namespace clumplab {

WeightedClumpGraph random_layered_graph(std::mt19937_64& rng, const RandomLayeredOptions& opt) {
  if (opt.k < 2 || opt.k > kMaxColors) throw std::invalid_argument("random_layered_graph needs 2 <= k <= 64");
  if (opt.max_depth < 1 || opt.max_weight < 1) throw std::invalid_argument("random_layered_graph needs depth, weight >= 1");
  std::uniform_int_distribution<std::size_t> depth_dist(1, opt.max_depth);
  std::uniform_int_distribution<unsigned> weight_dist(1, opt.max_weight);
  std::uniform_int_distribution<std::uint32_t> color_dist(0, static_cast<std::uint32_t>(opt.k - 1));
  std::bernoulli_distribution coin(0.5);

  const std::size_t depth = depth_dist(rng);
  std::vector<LayerSpec> layers{{{ColorId{color_dist(rng)}, Integer(1)}}};
  for (std::size_t i = 1; i <= depth; ++i) {
    ColorSet prev = 0;
    for (const LayerEntry& e : layers.back()) prev |= color_bit(e.color);
    LayerSpec layer;
    while (layer.empty()) {
      for (std::uint32_t c = 0; c < opt.k; ++c) {
        const ColorId id{c};
        if (color_count(prev) == 1 && contains(prev, id)) continue;
        if (coin(rng)) layer.push_back({id, Integer(weight_dist(rng))});
      }
    }
    layers.push_back(std::move(layer));
  }
  return make_clump_graph(opt.k, std::move(layers), true);
}

WeightedClumpGraph random_corpus_graph(std::mt19937_64& rng, const RandomLayeredOptions& opt) {
  const WeightedClumpGraph h = random_layered_graph(rng, opt);
  return bfs_relayer(blow_up(h), blow_up_coloring(h), opt.k);
}

std::vector<WeightedClumpGraph> random_corpus(std::uint64_t seed, std::size_t count,
                                              const RandomLayeredOptions& opt) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedClumpGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_corpus_graph(rng, opt));
  return out;
}

}  // namespace clumplab

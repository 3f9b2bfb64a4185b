#include "clumplab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace clumplab {

namespace {

std::vector<Integer> heavy_light(std::size_t count, std::size_t heavy, const Integer& light) {
  std::vector<Integer> out(count, light);
  for (std::size_t j = 0; j < std::min(heavy, count); ++j) out[j] += 1;
  return out;
}

Integer require_divisible(const Integer& delta, const Integer& divisor, const char* what) {
  if (delta <= 0 || delta % divisor != 0) {
    throw std::invalid_argument(std::string(what) + ": delta = " + delta.str() +
                                " must be a positive multiple of " + divisor.str());
  }
  return delta / divisor;
}

}  // namespace

WeightedClumpGraph greedy_colored_graph(std::size_t k,
                                        const std::vector<std::vector<Integer>>& weights,
                                        bool rooted) {
  std::vector<LayerSpec> layers;
  ColorSet previous = 0;
  for (const auto& layer_weights : weights) {
    LayerSpec layer;
    ColorSet current = 0;
    for (const Integer& w : layer_weights) {
      if (w == 0) continue;
      const auto color = first_missing_color(previous | current, k);
      if (!color) throw std::invalid_argument("greedy coloring ran out of colors");
      current |= color_bit(*color);
      layer.push_back({*color, w});
    }
    previous = current;
    layers.push_back(std::move(layer));
  }
  return make_clump_graph(k, std::move(layers), rooted);
}

std::vector<std::vector<Integer>> counterexample_block_weights(std::size_t s,
                                                               const Integer& delta) {
  if (s < 1) throw std::invalid_argument("counterexample block needs s >= 1");
  const Integer two_s(2 * s);
  if (delta < two_s) {
    throw std::invalid_argument("counterexample block needs delta >= 2s, got delta = " +
                                delta.str() + ", s = " + std::to_string(s));
  }
  const Integer q = delta / two_s;
  const std::size_t d = (delta % two_s).convert_to<std::size_t>();

  std::vector<std::vector<Integer>> w(6 * s + 1);
  for (std::size_t i = 0; i <= s; ++i) w[3 * i] = {Integer(1)};
  for (std::size_t i = 0; i < s; ++i) {
    const std::size_t count = 2 * s - i;
    w[3 * i + 1] = heavy_light(count, d == 0 ? 0 : std::min(count, d - 1), q);
  }
  for (std::size_t i = 0; i + 1 < s; ++i) {
    const std::size_t heavy = d == 0 ? 0 : d - std::min(2 * s - i - 1, d - 1);
    w[3 * i + 2] = heavy_light(i + 1, heavy, q);
  }
  w[3 * s - 1] = heavy_light(s, d / 2, q);
  w[3 * s + 1] = heavy_light(s, (d + 1) / 2, q);
  if (d == 0) w[1][0] -= 1;
  for (std::size_t m = 3 * s + 2; m <= 6 * s; ++m) w[m] = w[6 * s - m];
  return w;
}

WeightedClumpGraph counterexample_block(std::size_t s, const Integer& delta) {
  return greedy_colored_graph(2 * s + 1, counterexample_block_weights(s, delta));
}

WeightedClumpGraph counterexample_graph(std::size_t s, const Integer& delta, std::size_t p) {
  if (p < 1) throw std::invalid_argument("counterexample graph needs p >= 1");
  const auto block = counterexample_block_weights(s, delta);
  std::vector<std::vector<Integer>> w;
  for (std::size_t j = 0; j < p; ++j) w.insert(w.end(), block.begin(), block.end());
  w[1][0] += 1;
  w[w.size() - 2][0] += 1;
  return greedy_colored_graph(2 * s + 1, w);
}

Integer counterexample_block_total(std::size_t s, const Integer& delta) {
  return Integer(2 * s + 1) * delta + Integer(2 * s) - 1;
}

Integer counterexample_order(std::size_t s, const Integer& delta, std::size_t p) {
  return Integer(p) * counterexample_block_total(s, delta) + 2;
}

std::size_t counterexample_depth(std::size_t s, std::size_t p) { return p * (6 * s + 1) - 1; }

WeightedClumpGraph eppt_odd(std::size_t r, const Integer& delta, std::size_t depth) {
  if (r < 1) throw std::invalid_argument("eppt_odd needs r >= 1");
  if (depth < 2) throw std::invalid_argument("eppt_odd needs D >= 2");
  const Integer interior = require_divisible(delta, Integer(3 * r - 1), "eppt_odd");
  std::vector<std::vector<Integer>> w(depth + 1);
  w[0] = {Integer(1)};
  for (std::size_t i = 1; i <= depth; ++i) {
    const bool boundary = i == 1 || i == depth || (r == 1 && i == depth - 1);
    w[i].assign(r, boundary ? delta : interior);
  }
  return greedy_colored_graph(2 * r, w);
}

EpptEvenResult eppt_even(std::size_t r, const Integer& delta, std::size_t depth) {
  if (r < 2) throw std::invalid_argument("eppt_even needs r >= 2");
  if (depth < 2) throw std::invalid_argument("eppt_even needs D >= 2");
  const Integer unit = require_divisible(delta, Integer((r - 1) * (3 * r + 2)), "eppt_even");
  const Integer interior = Integer(r + 1) * unit;
  std::vector<std::vector<Integer>> w(depth + 1);
  w[0] = {Integer(1)};
  for (std::size_t i = 1; i <= depth; ++i) {
    w[i].assign(i % 2 == 1 ? r : r - 1, (i == 1 || i == depth) ? delta : interior);
  }
  EpptEvenResult result{greedy_colored_graph(2 * r - 1, w), 0, 0};
  result.min_weighted_degree = min_weighted_degree(result.graph);
  result.phi = normalized_diameter(depth, delta, result.graph.total_weight());
  return result;
}

Rational coefficient_gap(std::size_t r, const Integer& delta) {
  const Integer R(r);
  const Rational first(Integer((6 * R - 5) * delta), Integer((2 * R - 1) * delta + 2 * R - 3));
  const Rational second(Integer(2 * (R - 1) * (3 * R + 2)), Integer(2 * R * R - 1));
  return first - second;
}

Integer coefficient_gap_threshold(std::size_t r) {
  const Integer R(r);
  return 12 * R * R * R - 22 * R * R - 2 * R + 12;
}

Rational coefficient_gap_factored(std::size_t r, const Integer& delta) {
  const Integer R(r);
  const Rational scale(Integer(1), Integer((2 * R * R - 1) * (2 * R - 1)));
  const Rational top = 1 - Rational(coefficient_gap_threshold(r), delta);
  const Rational bottom = 1 + Rational(Integer(2 * R - 3), Integer((2 * R - 1) * delta));
  return scale * top / bottom;
}

Rational normalized_diameter(std::size_t depth, const Integer& delta, const Integer& n) {
  return Rational(Integer(depth) * delta, n);
}

}  // namespace clumplab

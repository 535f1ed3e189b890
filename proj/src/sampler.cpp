#include "qbmap/sampler.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qbmap/contour.hpp"

namespace qbmap {

Bridge sample_bridge(int sigma, Rng& rng) {
  if (sigma < 1) throw std::invalid_argument("need sigma >= 1");
  const auto m = 2 * static_cast<std::size_t>(sigma);
  std::vector<int> pos(m);
  for (std::size_t i = 0; i < m; ++i) pos[i] = static_cast<int>(i);
  std::vector<int> pm1(m, +1);
  for (std::size_t k = 0; k < static_cast<std::size_t>(sigma); ++k) {
    const std::size_t j = k + rng.below(m - k);
    std::swap(pos[k], pos[j]);
    pm1[static_cast<std::size_t>(pos[k])] = -1;
  }
  return pm1_to_bridge(pm1);
}

std::vector<int> cycle_lemma_starts(const std::vector<int>& steps, int sigma) {
  const auto K = steps.size();
  std::vector<long> S(K + 1, 0);
  for (std::size_t t = 0; t < K; ++t) S[t + 1] = S[t] + steps[t];
  if (S[K] != -sigma) throw std::invalid_argument("steps must sum to -sigma");
  std::vector<long> suffix_min(K + 1);
  suffix_min[K] = S[K] + 2L * sigma + 2;  // beyond any constraint
  for (std::size_t u = K; u-- > 1;) suffix_min[u] = std::min(suffix_min[u + 1], S[u]);
  std::vector<int> starts;
  long prefix_min = 1;
  for (std::size_t t = 0; t < K; ++t) {
    if (S[t] < prefix_min && (t + 1 >= K || S[t] < suffix_min[t + 1] + sigma))
      starts.push_back(static_cast<int>(t));
    prefix_min = std::min(prefix_min, S[t]);
  }
  return starts;
}

ForestShape sample_forest_shape(int n, int sigma, Rng& rng) {
  if (n < 0 || sigma < 1) throw std::invalid_argument("need n >= 0 and sigma >= 1");
  const auto K = static_cast<std::size_t>(2 * n + sigma);
  std::vector<int> steps(K, -1);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) steps[i] = +1;
  for (std::size_t i = K; i > 1; --i) std::swap(steps[i - 1], steps[rng.below(i)]);
  const auto starts = cycle_lemma_starts(steps, sigma);
  if (starts.size() != static_cast<std::size_t>(sigma)) throw std::logic_error("cycle lemma violated");
  const auto t = static_cast<std::size_t>(starts[rng.below(starts.size())]);

  ContourPair cp;
  cp.C.resize(K + 1);
  cp.L.assign(K + 1, 0);
  cp.C[0] = sigma;
  for (std::size_t j = 0; j < K; ++j) cp.C[j + 1] = cp.C[j] + steps[(t + j) % K];
  return forest_from_contour(cp).shape();
}

WellLabeledForest sample_labels(const ForestShape& shape, Rng& rng) {
  std::vector<Label> labels(static_cast<std::size_t>(shape.vertex_count()), 0);
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    const VertexId p = shape.parent(v);
    if (p >= 0) labels[static_cast<std::size_t>(v)] = labels[static_cast<std::size_t>(p)] + static_cast<int>(rng.below(3)) - 1;
  }
  return WellLabeledForest(shape, std::move(labels));
}

ForestBridge sample_encoding(int n, int sigma, Rng& rng) {
  WellLabeledForest f = sample_labels(sample_forest_shape(n, sigma, rng), rng);
  Bridge b = sample_bridge(sigma, rng);
  return ForestBridge{std::move(f), std::move(b)};
}

PointedBoundaryMap sample_quadrangulation(int n, int sigma, Rng& rng) {
  const ForestBridge fb = sample_encoding(n, sigma, rng);
  return bdg_forward(fb.forest, fb.bridge);
}

Bridge sample_bridge(int sigma, Seed seed) {
  Rng rng(seed);
  return sample_bridge(sigma, rng);
}

ForestShape sample_forest_shape(int n, int sigma, Seed seed) {
  Rng rng(seed);
  return sample_forest_shape(n, sigma, rng);
}

WellLabeledForest sample_labels(const ForestShape& shape, Seed seed) {
  Rng rng(seed);
  return sample_labels(shape, rng);
}

PointedBoundaryMap sample_quadrangulation(int n, int sigma, Seed seed) {
  Rng rng(seed);
  return sample_quadrangulation(n, sigma, rng);
}

}  // namespace qbmap

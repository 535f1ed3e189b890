#include "qbmap/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "qbmap/contour.hpp"

namespace qbmap {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

RangeMin::RangeMin(std::vector<int> values) {
  if (values.empty()) throw std::invalid_argument("range minimum over an empty array");
  table_.push_back(std::move(values));
  const std::size_t n = table_.front().size();
  for (std::size_t w = 1; 2 * w <= n; w *= 2) {
    const auto& prev = table_.back();
    std::vector<int> row(n - 2 * w + 1);
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = std::min(prev[i], prev[i + w]);
    table_.push_back(std::move(row));
  }
}

int RangeMin::min(int i, int j) const {
  const int k = std::bit_width(static_cast<unsigned>(j - i + 1)) - 1;
  return std::min(table_[ix(k)][ix(i)], table_[ix(k)][ix(j - (1 << k) + 1)]);
}

int RangeMin::cyclic_min(int i, int j) const {
  if (i <= j) return min(i, j);
  return std::min(min(i, size() - 1), min(0, j));
}

Graph::Graph(const PlanarMap& map) {
  const int V = map.vertex_count();
  offset_.assign(ix(V) + 1, 0);
  for (HalfEdgeId h = 0; h < map.half_edge_count(); ++h) ++offset_[ix(map.origin(h)) + 1];
  for (int v = 0; v < V; ++v) offset_[ix(v) + 1] += offset_[ix(v)];
  adj_.resize(ix(map.half_edge_count()));
  for (VertexId v = 0; v < V; ++v) {
    int pos = offset_[ix(v)];
    const HalfEdgeId first = map.vertex_half_edge(v);
    HalfEdgeId h = first;
    do {
      adj_[ix(pos++)] = map.target(h);
      h = map.next(h);
    } while (h != first);
  }
}

int Graph::bfs(VertexId source, std::vector<int>& dist) const {
  if (source < 0 || source >= vertex_count()) throw std::out_of_range("source vertex out of range");
  dist.assign(ix(vertex_count()), -1);
  queue_.resize(ix(vertex_count()));
  std::size_t head = 0, tail = 0;
  queue_[tail++] = source;
  dist[ix(source)] = 0;
  int ecc = 0;
  while (head < tail) {
    const VertexId v = queue_[head++];
    const int dv = dist[ix(v)];
    ecc = dv;
    for (VertexId w : neighbors(v))
      if (dist[ix(w)] < 0) {
        dist[ix(w)] = dv + 1;
        queue_[tail++] = w;
      }
  }
  return ecc;
}

DistanceProfile bfs_distances(const PlanarMap& map, VertexId source) {
  DistanceProfile p;
  p.source = source;
  const int ecc = Graph(map).bfs(source, p.dist);
  p.histogram.assign(ix(ecc) + 1, 0);
  for (int d : p.dist) {
    if (d < 0) throw std::invalid_argument("map is disconnected");
    ++p.histogram[ix(d)];
  }
  return p;
}

namespace {

std::vector<int> corner_labels(const ForestBridge& fb, std::vector<VertexId>& facial, std::vector<int>& lhat) {
  facial = facial_sequence(fb.forest.shape());
  facial.pop_back();
  lhat = shifted_vertex_labels(fb.forest, fb.bridge);
  std::vector<int> seq(facial.size());
  for (std::size_t i = 0; i < facial.size(); ++i) seq[i] = lhat[ix(facial[i])];
  return seq;
}

}  // namespace

LabelBounds::LabelBounds(ForestBridge fb)
    : fb_(std::move(fb)),
      K_(fb_.forest.shape().corner_count()),
      seq_(corner_labels(fb_, facial_, lhat_)),
      floor_(std::vector<int>(fb_.bridge.values().begin(), fb_.bridge.values().end() - 1)) {
  const ForestShape& shape = fb_.forest.shape();
  chain_min_.resize(ix(shape.vertex_count()));
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    const VertexId p = shape.parent(v);
    chain_min_[ix(v)] = p < 0 ? lhat_[ix(v)] : std::min(lhat_[ix(v)], chain_min_[ix(p)]);
  }
}

int LabelBounds::upper(int i, int j) const {
  const int m = std::max(seq_.cyclic_min(i, j), seq_.cyclic_min(j, i));
  return seq_.at(i) + seq_.at(j) - 2 * m + 2;
}

int LabelBounds::lower(VertexId a, VertexId b) const {
  if (a == b) return 0;
  const ForestShape& shape = fb_.forest.shape();
  const int ta = shape.tree_of(a), tb = shape.tree_of(b);
  const int base = lhat_[ix(a)] + lhat_[ix(b)];
  if (ta == tb) {
    int m = std::min(lhat_[ix(a)], lhat_[ix(b)]);
    VertexId x = a, y = b;
    while (x != y) {
      if (shape.depth(x) >= shape.depth(y)) x = shape.parent(x);
      else y = shape.parent(y);
      m = std::min({m, lhat_[ix(x)], lhat_[ix(y)]});
    }
    return base - 2 * m;
  }
  const int chains = std::min(chain_min_[ix(a)], chain_min_[ix(b)]);
  const int m1 = std::min(chains, floor_.cyclic_min(ta, tb));
  const int m2 = std::min(chains, floor_.cyclic_min(tb, ta));
  return base - 2 * std::max(m1, m2);
}

std::pair<BoundReport, BoundReport> check_distance_bounds(const PointedBoundaryMap& pm, const ForestBridge& fb,
                                                          Rng& rng, int sources, int targets) {
  if (pm.map.vertex_count() != fb.forest.shape().vertex_count() + 1)
    throw std::invalid_argument("map does not match its encoding");
  const LabelBounds bounds(fb);
  const Graph g(pm.map);
  const auto K = static_cast<std::uint64_t>(bounds.corner_count());
  BoundReport up, low;
  up.max_violation = low.max_violation = std::numeric_limits<int>::min();
  std::vector<int> dist;
  for (int s = 0; s < sources; ++s) {
    const auto i = static_cast<int>(rng.below(K));
    const VertexId a = bounds.corner_vertex(i);
    g.bfs(a, dist);
    for (int t = 0; t < targets; ++t) {
      const auto j = static_cast<int>(rng.below(K));
      const VertexId b = bounds.corner_vertex(j);
      const int d = dist[ix(b)];
      const int vu = d - bounds.upper(i, j);
      const int vl = bounds.lower(a, b) - d;
      ++up.pairs;
      ++low.pairs;
      if (vu > 0) ++up.violations;
      if (vl > 0) ++low.violations;
      up.max_violation = std::max(up.max_violation, vu);
      low.max_violation = std::max(low.max_violation, vl);
    }
  }
  return {up, low};
}

BoundReport check_distance_upper_bound(const PointedBoundaryMap& pm, const ForestBridge& fb, Rng& rng, int sources,
                                       int targets) {
  return check_distance_bounds(pm, fb, rng, sources, targets).first;
}

BoundReport check_cactus_lower_bound(const PointedBoundaryMap& pm, const ForestBridge& fb, Rng& rng, int sources,
                                     int targets) {
  return check_distance_bounds(pm, fb, rng, sources, targets).second;
}

std::vector<std::int64_t> ball_volume_profile(const Graph& g, VertexId center, int r_max) {
  return boundary_ball_profile(g, std::vector<char>(ix(g.vertex_count()), 1), center, r_max);
}

std::vector<std::int64_t> boundary_ball_profile(const Graph& g, const std::vector<char>& on_boundary,
                                                VertexId center, int r_max) {
  std::vector<int> dist;
  g.bfs(center, dist);
  std::vector<std::int64_t> counts(ix(r_max) + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (on_boundary[ix(v)] && dist[ix(v)] <= r_max) ++counts[ix(dist[ix(v)])];
  for (int r = 1; r <= r_max; ++r) counts[ix(r)] += counts[ix(r - 1)];
  return counts;
}

std::vector<char> boundary_mask(const BoundaryMap& map) {
  std::vector<char> mask(ix(map.vertex_count()), 0);
  for (VertexId v : map.boundary_vertices()) mask[ix(v)] = 1;
  return mask;
}

int diameter(const PlanarMap& map, DiameterMode mode, VertexId start) {
  const Graph g(map);
  std::vector<int> dist;
  if (mode == DiameterMode::exact) {
    if (g.vertex_count() > kExactDiameterCap) throw std::invalid_argument("exact diameter above the size cap");
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.bfs(v, dist));
    return best;
  }
  g.bfs(start, dist);
  const auto far = static_cast<VertexId>(std::max_element(dist.begin(), dist.end()) - dist.begin());
  return g.bfs(far, dist);
}

double correspondence_distortion(const std::function<double(int, int)>& dX, const std::function<double(int, int)>& dY,
                                 const Correspondence& R) {
  if (R.empty()) throw std::invalid_argument("empty correspondence");
  double worst = 0.0;
  for (const auto& [x, xp] : R)
    for (const auto& [y, yp] : R) worst = std::max(worst, std::abs(dX(x, y) - dY(xp, yp)));
  return worst;
}

DistortionEstimate graph_distortion(const PlanarMap& X, const PlanarMap& Y, const Correspondence& R, Rng* rng,
                                    int max_sources) {
  if (R.empty()) throw std::invalid_argument("empty correspondence");
  const Graph gx(X), gy(Y);
  DistortionEstimate est;
  std::vector<std::size_t> picks;
  if (X.vertex_count() <= kExactDistortionCap || rng == nullptr || static_cast<std::size_t>(max_sources) >= R.size()) {
    picks.resize(R.size());
    for (std::size_t k = 0; k < R.size(); ++k) picks[k] = k;
    est.exact = true;
  } else {
    for (int s = 0; s < max_sources; ++s) picks.push_back(static_cast<std::size_t>(rng->below(R.size())));
  }
  std::unordered_map<int, std::vector<int>> rows_x, rows_y;
  auto row = [](const Graph& g, std::unordered_map<int, std::vector<int>>& cache, int v) -> const std::vector<int>& {
    auto it = cache.find(v);
    if (it == cache.end()) {
      if (cache.size() > 4096) cache.clear();
      it = cache.emplace(v, std::vector<int>{}).first;
      g.bfs(v, it->second);
    }
    return it->second;
  };
  for (std::size_t k : picks) {
    const auto [x, xp] = R[k];
    const std::vector<int>& dx = row(gx, rows_x, x);
    const std::vector<int>& dy = row(gy, rows_y, xp);
    for (const auto& [y, yp] : R)
      est.distortion = std::max(est.distortion, static_cast<double>(std::abs(dx[ix(y)] - dy[ix(yp)])));
  }
  est.sources = static_cast<std::int64_t>(picks.size());
  return est;
}

int largest_tree_index(const ForestShape& shape) {
  int best = 0;
  for (int t = 1; t < shape.tree_count(); ++t)
    if (shape.tree_size(t) > shape.tree_size(best)) best = t;
  return best;
}

ForestBridge largest_tree(const ForestBridge& fb, int bit) {
  if (bit != 0 && bit != -1) throw std::invalid_argument("bridge bit must be 0 or -1");
  const ForestShape& shape = fb.forest.shape();
  const int t = largest_tree_index(shape);
  const auto counts = shape.tree(t);
  const VertexId r = shape.tree_root(t);
  std::vector<Label> labels(fb.forest.labels().begin() + r, fb.forest.labels().begin() + r + shape.tree_size(t));
  return ForestBridge{WellLabeledForest(ForestShape::from_preorder(1, std::vector<int>(counts.begin(), counts.end())),
                                        std::move(labels)),
                      Bridge({0, bit})};
}

int outside_label_span(const ForestBridge& fb, int tree) {
  const ForestShape& shape = fb.forest.shape();
  const auto lhat = shifted_vertex_labels(fb.forest, fb.bridge);
  const VertexId r = shape.tree_root(tree);
  const VertexId end = r + shape.tree_size(tree);
  int lo = lhat.back(), hi = lhat.back();
  for (VertexId v = 0; v < shape.vertex_count(); ++v) {
    if (v > r && v < end) continue;
    lo = std::min(lo, lhat[ix(v)]);
    hi = std::max(hi, lhat[ix(v)]);
  }
  return hi - lo;
}

TreeComparison largest_tree_comparison(const ForestBridge& fb, int bit, Rng* rng, int max_sources) {
  const ForestShape& shape = fb.forest.shape();
  if (shape.edge_count() < 1) throw std::invalid_argument("forest has no tree edge");
  const int t = largest_tree_index(shape);
  const ForestBridge tree = largest_tree(fb, bit);
  TreeComparison out{bdg_forward(fb.forest, fb.bridge), bdg_forward(tree.forest, tree.bridge), t,
                     shape.tree_size(t), outside_label_span(fb, t), {}, {}, 0.0};
  const VertexId r = shape.tree_root(t);
  const VertexId end = r + shape.tree_size(t);
  const VertexId N = shape.vertex_count();
  for (VertexId a = 0; a < N; ++a) out.correspondence.emplace_back(a, (a >= r && a < end) ? a - r : 0);
  out.correspondence.emplace_back(N, out.tree_vertices);
  out.distortion = graph_distortion(out.map_from_forest.map, out.map_from_tree.map, out.correspondence, rng, max_sources);
  out.bound = 4.0 * (out.label_span + 1);
  return out;
}

}  // namespace qbmap

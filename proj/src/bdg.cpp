#include "qbmap/bdg.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>

namespace qbmap {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

PointedBoundaryMap bdg_forward(const WellLabeledForest& wlf, const Bridge& b) {
  const ForestShape& shape = wlf.shape();
  if (shape.tree_count() != b.sigma()) throw std::invalid_argument("forest and bridge disagree on sigma");
  const int sigma = b.sigma();
  const int K = shape.corner_count();
  const int N = shape.vertex_count();

  const auto facial = facial_sequence(shape);
  const auto lt = shifted_labels(wlf, b).normalized();
  const auto succ = successors(lt);

  // Incoming arcs per target corner, ordered by cyclic distance from it.
  std::vector<int> in_start(ix(K) + 1, 0);
  int to_pointed = 0;
  for (int j = 0; j < K; ++j) {
    if (succ[ix(j)] == kPointed) ++to_pointed;
    else ++in_start[ix(succ[ix(j)]) + 1];
  }
  for (int c = 0; c < K; ++c) in_start[ix(c) + 1] += in_start[ix(c)];
  std::vector<int> in_list(ix(in_start[ix(K)]));
  std::vector<int> fill(in_start.begin(), in_start.end() - 1);
  for (int pass = 0; pass < 2; ++pass)
    for (int j = 0; j < K; ++j) {
      const int c = succ[ix(j)];
      if (c == kPointed || (pass == 0) != (j > c)) continue;
      in_list[ix(fill[ix(c)]++)] = j;
    }

  // Corners of each vertex in increasing facial index.
  std::vector<int> vc_start(ix(N) + 1, 0);
  for (int i = 0; i < K; ++i) ++vc_start[ix(facial[ix(i)]) + 1];
  for (int v = 0; v < N; ++v) vc_start[ix(v) + 1] += vc_start[ix(v)];
  std::vector<int> vc_list(ix(K));
  {
    std::vector<int> pos(vc_start.begin(), vc_start.end() - 1);
    for (int i = 0; i < K; ++i) vc_list[ix(pos[ix(facial[ix(i)])]++)] = i;
  }

  std::vector<HalfEdgeId> twin(2 * ix(K)), next(2 * ix(K), -1);
  for (int i = 0; i < K; ++i) {
    twin[ix(i)] = K + i;
    twin[ix(K + i)] = i;
  }
  std::vector<HalfEdgeId> ring;
  auto close_ring = [&]() {
    for (std::size_t k = 0; k < ring.size(); ++k) next[ix(ring[k])] = ring[(k + 1) % ring.size()];
  };
  for (int v = 0; v < N; ++v) {
    ring.clear();
    for (int p = vc_start[ix(v) + 1] - 1; p >= vc_start[ix(v)]; --p) {
      const int i = vc_list[ix(p)];
      ring.push_back(i);
      for (int q = in_start[ix(i)]; q < in_start[ix(i) + 1]; ++q) ring.push_back(K + in_list[ix(q)]);
    }
    close_ring();
  }
  ring.clear();
  for (int i = 0; i < K; ++i)
    if (succ[ix(i)] == kPointed) ring.push_back(K + i);
  close_ring();

  HalfEdgeId root;
  if (b[sigma] > b[sigma - 1] - 1) {
    int c = 0;
    for (int s = 0; s < -b[sigma]; ++s) {
      c = succ[ix(c)];
      if (c == kPointed) throw std::logic_error("root corner walks into the pointed vertex");
    }
    root = c;
  } else {
    root = K + (K - 1);
  }
  BoundaryMap map(std::move(twin), std::move(next), root);
  return PointedBoundaryMap(std::move(map), N);
}

std::vector<int> map_distances(const PlanarMap& map, VertexId source) {
  if (source < 0 || source >= map.vertex_count()) throw std::out_of_range("source vertex out of range");
  std::vector<int> dist(ix(map.vertex_count()), -1);
  std::vector<VertexId> queue;
  queue.reserve(ix(map.vertex_count()));
  queue.push_back(source);
  dist[ix(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    const HalfEdgeId first = map.vertex_half_edge(v);
    HalfEdgeId h = first;
    do {
      const VertexId w = map.target(h);
      if (dist[ix(w)] < 0) {
        dist[ix(w)] = dist[ix(v)] + 1;
        queue.push_back(w);
      }
      h = map.next(h);
    } while (h != first);
  }
  return dist;
}

ForestBridge bdg_inverse(const PointedBoundaryMap& pq) {
  const BoundaryMap& q = pq.map;
  const int H = q.half_edge_count();
  const int sigma = q.sigma();
  const auto lt = map_distances(q, pq.pointed);
  for (int d : lt)
    if (d < 0) throw std::invalid_argument("map is disconnected");
  auto lab = [&](HalfEdgeId h) { return lt[ix(q.origin(h))]; };
  for (HalfEdgeId h = 0; h < H; ++h)
    if (std::abs(lab(h) - lab(q.twin(h))) != 1) throw std::invalid_argument("map is not bipartite");

  // Tree edges are stored as pairs of ends (2e, 2e+1); a corner is keyed by the
  // map half-edge that follows it counterclockwise and holds at most two ends.
  std::vector<std::array<int, 2>> corner_ends(ix(H), {-1, -1});
  std::vector<VertexId> end_vertex;
  auto add_end = [&](HalfEdgeId key, VertexId v) {
    const int e = static_cast<int>(end_vertex.size());
    end_vertex.push_back(v);
    auto& slot = corner_ends[ix(key)];
    if (slot[0] < 0) slot[0] = e;
    else if (slot[1] < 0) slot[1] = e;
    else throw std::invalid_argument("corner receives more than two tree ends");
  };
  auto add_chord = [&](HalfEdgeId a, HalfEdgeId c) {
    add_end(a, q.origin(a));
    add_end(c, q.origin(c));
  };

  const int ext = q.external_face();
  for (int f = 0; f < q.face_count(); ++f) {
    if (f == ext) continue;
    std::array<HalfEdgeId, 4> g{};
    g[0] = q.face_half_edge(f);
    for (int k = 1; k < 4; ++k) g[ix(k)] = q.face_step(g[ix(k - 1)]);
    int top = 0;
    for (int k = 1; k < 4; ++k)
      if (lab(g[ix(k)]) > lab(g[ix(top)])) top = k;
    const int lo = std::min({lab(g[0]), lab(g[1]), lab(g[2]), lab(g[3])});
    if (lab(g[ix(top)]) - lo == 2) add_chord(g[ix(top)], g[ix((top + 1) % 4)]);
    else add_chord(g[ix(top)], g[ix((top + 2) % 4)]);
  }

  const auto walk = q.boundary_walk();
  const int m = static_cast<int>(walk.size());
  std::vector<int> picks;
  for (int i = 0; i < m; ++i) {
    const int li = lt[ix(q.target(walk[ix(i)]))];
    const int lnext = lt[ix(q.target(walk[ix((i + 1) % m)]))];
    if (lnext == li - 1) picks.push_back(i);
  }
  if (static_cast<int>(picks.size()) != sigma) throw std::invalid_argument("boundary does not select sigma floor vertices");

  const VertexId floor_end = q.vertex_count();  // stands in for the phantom
  // Floor edge k runs east from root k to root k+1 (or to the phantom); the
  // west end at root k+1 is added first, so each floor corner reads [west, east].
  auto floor_key = [&](int k) { return walk[ix((picks[ix(k)] + 1) % m)]; };
  std::vector<int> east(ix(sigma));
  for (int k = 0; k < sigma; ++k) {
    east[ix(k)] = static_cast<int>(end_vertex.size());
    add_end(floor_key(k), q.origin(floor_key(k)));
    if (k + 1 < sigma) add_end(floor_key(k + 1), q.origin(floor_key(k + 1)));
    else end_vertex.push_back(floor_end);
  }
  const int E = static_cast<int>(end_vertex.size());
  std::vector<int> t_prev(ix(E), -1);
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    std::vector<int> ring;
    const HalfEdgeId first = q.vertex_half_edge(v);
    HalfEdgeId h = first;
    do {
      for (int e : corner_ends[ix(h)])
        if (e >= 0) ring.push_back(e);
      h = q.next(h);
    } while (h != first);
    for (std::size_t k = 0; k < ring.size(); ++k) t_prev[ix(ring[(k + 1) % ring.size()])] = ring[k];
  }
  auto tw = [](int e) { return e ^ 1; };

  const int n = q.n();
  std::vector<int> pre(ix(q.vertex_count()), -1);
  std::vector<int> counts;
  std::vector<int> labels;
  counts.reserve(ix(n + sigma));
  labels.reserve(ix(n + sigma));
  int root_label = 0;
  auto discover = [&](VertexId v) {
    pre[ix(v)] = static_cast<int>(counts.size());
    counts.push_back(0);
    labels.push_back(lt[ix(v)] - root_label);
  };
  const VertexId first_root = end_vertex[ix(east[0])];
  root_label = lt[ix(first_root)];
  discover(first_root);
  std::vector<char> is_east(ix(E), 0);
  for (int e : east) is_east[ix(e)] = 1;

  int d = t_prev[ix(east[0])];
  for (long guard = 0;; ++guard) {
    if (guard > 4L * E + 4) throw std::invalid_argument("tree walk does not terminate");
    const VertexId from = end_vertex[ix(d)];
    const VertexId to = end_vertex[ix(tw(d))];
    if (to == floor_end) break;
    if (is_east[ix(d)]) {
      if (pre[ix(to)] >= 0) throw std::invalid_argument("floor revisits a vertex");
      root_label = lt[ix(to)];
      discover(to);
    } else if (pre[ix(to)] < 0) {
      ++counts[ix(pre[ix(from)])];
      discover(to);
    }
    d = t_prev[ix(tw(d))];
  }
  if (static_cast<int>(counts.size()) != n + sigma) throw std::invalid_argument("tree walk misses vertices");

  std::vector<int> bv(ix(sigma) + 1);
  const int base = lt[ix(first_root)];
  for (int k = 0; k < sigma; ++k)
    bv[ix(k)] = lt[ix(q.origin(floor_key(k)))] - base;
  bv[ix(sigma)] = lt[ix(q.target(walk[0]))] - base;

  return ForestBridge{WellLabeledForest(ForestShape::from_preorder(sigma, std::move(counts)), std::move(labels)),
                      Bridge(std::move(bv))};
}

}  // namespace qbmap

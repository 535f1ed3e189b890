#include "qbmap/planar_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qbmap {

PlanarMap::PlanarMap(std::vector<HalfEdgeId> twin, std::vector<HalfEdgeId> next, HalfEdgeId root)
    : twin_(std::move(twin)), next_(std::move(next)), root_(root) {
  const auto m = twin_.size();
  if (m == 0 || m % 2 != 0) throw std::invalid_argument("half-edge count must be even and positive");
  if (next_.size() != m) throw std::invalid_argument("twin and next sizes differ");
  if (root_ < 0 || idx(root_) >= m) throw std::invalid_argument("root out of range");
  for (std::size_t h = 0; h < m; ++h) {
    const auto t = twin_[h];
    if (t < 0 || idx(t) >= m || idx(t) == h || idx(twin_[idx(t)]) != h)
      throw std::invalid_argument("twin is not a fixed-point-free involution at " + std::to_string(h));
  }
  prev_.assign(m, -1);
  for (std::size_t h = 0; h < m; ++h) {
    const auto n = next_[h];
    if (n < 0 || idx(n) >= m || prev_[idx(n)] != -1) throw std::invalid_argument("next is not a permutation");
    prev_[idx(n)] = static_cast<HalfEdgeId>(h);
  }

  vertex_of_.assign(m, -1);
  face_of_.assign(m, -1);
  for (std::size_t h = 0; h < m; ++h) {
    if (vertex_of_[h] < 0) {
      const auto v = static_cast<VertexId>(vertex_first_.size());
      vertex_first_.push_back(static_cast<HalfEdgeId>(h));
      int deg = 0;
      auto g = static_cast<HalfEdgeId>(h);
      do {
        vertex_of_[idx(g)] = v;
        ++deg;
        g = next_[idx(g)];
      } while (idx(g) != h);
      vertex_degree_.push_back(deg);
    }
    if (face_of_[h] < 0) {
      const auto f = static_cast<int>(face_first_.size());
      face_first_.push_back(static_cast<HalfEdgeId>(h));
      int deg = 0;
      auto g = static_cast<HalfEdgeId>(h);
      do {
        face_of_[idx(g)] = f;
        ++deg;
        g = next_[idx(twin_[idx(g)])];
      } while (idx(g) != h);
      face_degree_.push_back(deg);
    }
  }
}

bool PlanarMap::is_connected() const {
  std::vector<char> seen(vertex_first_.size(), 0);
  std::vector<VertexId> stack{origin(root_)};
  seen[idx(stack.back())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    HalfEdgeId h = vertex_first_[idx(v)];
    do {
      const VertexId w = target(h);
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
      h = next(h);
    } while (h != vertex_first_[idx(v)]);
  }
  return reached == vertex_first_.size();
}

BoundaryMap::BoundaryMap(std::vector<HalfEdgeId> twin, std::vector<HalfEdgeId> next, HalfEdgeId root)
    : PlanarMap(std::move(twin), std::move(next), root) {
  validate();
}

BoundaryMap::BoundaryMap(PlanarMap map) : PlanarMap(std::move(map)) { validate(); }

void BoundaryMap::validate() {
  const int ext = external_face();
  const int ext_deg = face_degree(ext);
  if (ext_deg % 2 != 0) throw std::invalid_argument("external face has odd degree");
  sigma_ = ext_deg / 2;
  for (int f = 0; f < face_count(); ++f)
    if (f != ext && face_degree(f) != 4)
      throw std::invalid_argument("internal face " + std::to_string(f) + " has degree " +
                                  std::to_string(face_degree(f)));
  if (vertex_count() - edge_count() + face_count() != 2) throw std::invalid_argument("map is not planar and connected");
  if (!is_connected()) throw std::invalid_argument("map is disconnected");
}

std::vector<HalfEdgeId> BoundaryMap::boundary_walk() const {
  std::vector<HalfEdgeId> out;
  out.reserve(static_cast<std::size_t>(2 * sigma_));
  const HalfEdgeId start = twin(root());
  HalfEdgeId g = start;
  do {
    out.push_back(g);
    g = face_step(g);
  } while (g != start);
  return out;
}

std::vector<VertexId> BoundaryMap::boundary_vertices() const {
  std::vector<VertexId> out;
  for (HalfEdgeId g : boundary_walk()) out.push_back(origin(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PointedBoundaryMap::PointedBoundaryMap(BoundaryMap m, VertexId v) : map(std::move(m)), pointed(v) {
  if (pointed < 0 || pointed >= map.vertex_count()) throw std::invalid_argument("pointed vertex out of range");
}

}  // namespace qbmap

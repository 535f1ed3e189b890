#pragma once

#include <span>
#include <vector>

#include "qbmap/forest.hpp"

namespace qbmap {

/// Rooted planar map as a rotation system on half-edges.
///
/// `next[h]` is the counterclockwise successor of h around its origin.
/// `face_of(h)` is the face on the right of h, traced by h -> next[twin[h]].
/// Vertices and faces are numbered by first appearance when scanning
/// half-edges in increasing id order.
class PlanarMap {
 public:
  PlanarMap(std::vector<HalfEdgeId> twin, std::vector<HalfEdgeId> next, HalfEdgeId root);

  int half_edge_count() const { return static_cast<int>(twin_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  int vertex_count() const { return static_cast<int>(vertex_first_.size()); }
  int face_count() const { return static_cast<int>(face_first_.size()); }

  HalfEdgeId root() const { return root_; }
  HalfEdgeId twin(HalfEdgeId h) const { return twin_[idx(h)]; }
  HalfEdgeId next(HalfEdgeId h) const { return next_[idx(h)]; }
  HalfEdgeId prev(HalfEdgeId h) const { return prev_[idx(h)]; }
  /// Next half-edge along the face on the right of h.
  HalfEdgeId face_step(HalfEdgeId h) const { return next(twin(h)); }

  VertexId origin(HalfEdgeId h) const { return vertex_of_[idx(h)]; }
  VertexId target(HalfEdgeId h) const { return origin(twin(h)); }
  int face_of(HalfEdgeId h) const { return face_of_[idx(h)]; }
  int left_face(HalfEdgeId h) const { return face_of(twin(h)); }

  HalfEdgeId vertex_half_edge(VertexId v) const { return vertex_first_[idx(v)]; }
  HalfEdgeId face_half_edge(int f) const { return face_first_[idx(f)]; }
  int vertex_degree(VertexId v) const { return vertex_degree_[idx(v)]; }
  int face_degree(int f) const { return face_degree_[idx(f)]; }

  std::span<const HalfEdgeId> twins() const { return twin_; }
  std::span<const HalfEdgeId> nexts() const { return next_; }
  std::span<const VertexId> origins() const { return vertex_of_; }

  bool is_connected() const;

  friend bool operator==(const PlanarMap& a, const PlanarMap& b) {
    return a.root_ == b.root_ && a.twin_ == b.twin_ && a.next_ == b.next_;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  std::vector<HalfEdgeId> twin_;
  std::vector<HalfEdgeId> next_;
  std::vector<HalfEdgeId> prev_;
  HalfEdgeId root_;
  std::vector<VertexId> vertex_of_;
  std::vector<int> face_of_;
  std::vector<HalfEdgeId> vertex_first_;
  std::vector<HalfEdgeId> face_first_;
  std::vector<int> vertex_degree_;
  std::vector<int> face_degree_;
};

/// Planar quadrangulation with a boundary: the face on the left of the root
/// has degree 2*sigma, every other face has degree 4.
class BoundaryMap : public PlanarMap {
 public:
  BoundaryMap(std::vector<HalfEdgeId> twin, std::vector<HalfEdgeId> next, HalfEdgeId root);
  explicit BoundaryMap(PlanarMap map);

  int sigma() const { return sigma_; }
  /// Number of internal faces.
  int n() const { return face_count() - 1; }
  int external_face() const { return left_face(root()); }
  /// Half-edges with the external face on their right, starting at twin(root).
  std::vector<HalfEdgeId> boundary_walk() const;
  /// Vertices incident to the external face.
  std::vector<VertexId> boundary_vertices() const;

 private:
  void validate();
  int sigma_ = 0;
};

struct PointedBoundaryMap {
  BoundaryMap map;
  VertexId pointed;

  PointedBoundaryMap(BoundaryMap m, VertexId v);
  friend bool operator==(const PointedBoundaryMap& a, const PointedBoundaryMap& b) {
    return a.pointed == b.pointed && a.map == b.map;
  }
};

}  // namespace qbmap

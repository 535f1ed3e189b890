#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qbmap {

using VertexId = std::int32_t;
using HalfEdgeId = std::int32_t;
using Label = std::int32_t;

/// Ordered forest with `tree_count()` trees standing on a floor.
///
/// Vertices are numbered 0..n+sigma-1 in preorder, tree after tree, which is
/// also their order of first appearance along the facial sequence. Trees are
/// numbered 0..sigma-1. The extra floor vertex that closes the floor after the
/// last tree is not stored; `phantom()` is the id it would take.
class ForestShape {
 public:
  /// One preorder child-count sequence per tree.
  static ForestShape from_trees(const std::vector<std::vector<int>>& trees);
  /// Child counts of all trees concatenated in preorder.
  static ForestShape from_preorder(int sigma, std::vector<int> child_counts);
  /// `sigma` isolated floor vertices.
  static ForestShape bare(int sigma);

  int tree_count() const { return sigma_; }
  int edge_count() const { return static_cast<int>(child_counts_.size()) - sigma_; }
  int vertex_count() const { return static_cast<int>(child_counts_.size()); }
  /// Length of the facial sequence minus one, i.e. 2n + sigma.
  int corner_count() const { return 2 * edge_count() + sigma_; }
  VertexId phantom() const { return vertex_count(); }

  std::span<const int> child_counts() const { return child_counts_; }
  std::span<const int> tree(int t) const;
  VertexId tree_root(int t) const { return roots_[static_cast<std::size_t>(t)]; }
  /// Number of vertices of tree `t`, root included.
  int tree_size(int t) const;

  int child_count(VertexId v) const { return child_counts_[static_cast<std::size_t>(v)]; }
  /// -1 for floor vertices.
  VertexId parent(VertexId v) const { return parent_[static_cast<std::size_t>(v)]; }
  int depth(VertexId v) const { return depth_[static_cast<std::size_t>(v)]; }
  /// Zero-based tree index; `phantom()` maps to `tree_count()`.
  int tree_of(VertexId v) const;
  bool is_floor(VertexId v) const { return parent(v) < 0; }

  std::vector<std::vector<int>> to_trees() const;

  friend bool operator==(const ForestShape& a, const ForestShape& b) {
    return a.sigma_ == b.sigma_ && a.child_counts_ == b.child_counts_;
  }

 private:
  ForestShape(int sigma, std::vector<int> child_counts);

  int sigma_ = 0;
  std::vector<int> child_counts_;
  std::vector<VertexId> roots_;  // sigma + 1 entries, last one is phantom()
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::vector<int> tree_of_;
};

/// Forest plus integer labels, zero on the floor and varying by at most one
/// along every tree edge.
class WellLabeledForest {
 public:
  WellLabeledForest(ForestShape shape, std::vector<Label> labels);

  const ForestShape& shape() const { return shape_; }
  std::span<const Label> labels() const { return labels_; }
  Label label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }

  int tree_count() const { return shape_.tree_count(); }
  int edge_count() const { return shape_.edge_count(); }

  friend bool operator==(const WellLabeledForest&, const WellLabeledForest&) = default;

 private:
  ForestShape shape_;
  std::vector<Label> labels_;
};

}  // namespace qbmap

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qbmap/bdg.hpp"
#include "qbmap/planar_map.hpp"
#include "qbmap/rng.hpp"

namespace qbmap {

/// Sparse-table range minimum over a fixed integer array.
class RangeMin {
 public:
  explicit RangeMin(std::vector<int> values);

  int size() const { return static_cast<int>(table_.front().size()); }
  int at(int i) const { return table_.front()[static_cast<std::size_t>(i)]; }
  /// Minimum over [i, j], i <= j.
  int min(int i, int j) const;
  /// Minimum over i, i+1, ..., j read cyclically.
  int cyclic_min(int i, int j) const;

 private:
  std::vector<std::vector<int>> table_;
};

/// Compressed adjacency lists for repeated breadth-first searches.
class Graph {
 public:
  explicit Graph(const PlanarMap& map);

  int vertex_count() const { return static_cast<int>(offset_.size()) - 1; }
  std::span<const VertexId> neighbors(VertexId v) const {
    const auto b = static_cast<std::size_t>(offset_[static_cast<std::size_t>(v)]);
    const auto e = static_cast<std::size_t>(offset_[static_cast<std::size_t>(v) + 1]);
    return std::span<const VertexId>(adj_).subspan(b, e - b);
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  /// Fills `dist` (resized to vertex_count) and returns the eccentricity of `source`.
  int bfs(VertexId source, std::vector<int>& dist) const;

 private:
  std::vector<int> offset_;
  std::vector<VertexId> adj_;
  mutable std::vector<VertexId> queue_;
};

struct DistanceProfile {
  VertexId source = 0;
  std::vector<int> dist;
  std::vector<std::int64_t> histogram;  // vertices at each distance
};

DistanceProfile bfs_distances(const PlanarMap& map, VertexId source);

struct BoundReport {
  std::int64_t pairs = 0;
  std::int64_t violations = 0;
  /// Largest value of (distance - bound) for the upper bound, or (bound -
  /// distance) for the lower bound; must be <= 0.
  int max_violation = 0;
};

/// Label-based distance bounds for a map produced by `bdg_forward` from `fb`.
class LabelBounds {
 public:
  explicit LabelBounds(ForestBridge fb);

  int corner_count() const { return K_; }
  /// Vertex visited at corner i (equal to its id in the forward map).
  VertexId corner_vertex(int i) const { return facial_[static_cast<std::size_t>(i)]; }
  /// Upper bound on d(corner i, corner j) from the cyclic label minima.
  int upper(int i, int j) const;
  /// Lower bound on d(a, b) for forest vertices a, b via forest paths.
  int lower(VertexId a, VertexId b) const;
  int shifted(VertexId v) const { return lhat_[static_cast<std::size_t>(v)]; }

 private:
  ForestBridge fb_;
  int K_;
  std::vector<VertexId> facial_;
  std::vector<int> lhat_;       // per vertex
  std::vector<int> chain_min_;  // min of lhat from v up to its root
  RangeMin seq_;                // shifted labels along corners
  RangeMin floor_;              // b(0..sigma-1)
};

/// Checks both bounds on `sources` random corners against `targets` random
/// corners each. `pm` must be the forward image of `fb`.
std::pair<BoundReport, BoundReport> check_distance_bounds(const PointedBoundaryMap& pm, const ForestBridge& fb,
                                                          Rng& rng, int sources, int targets);
BoundReport check_distance_upper_bound(const PointedBoundaryMap& pm, const ForestBridge& fb, Rng& rng, int sources,
                                       int targets);
BoundReport check_cactus_lower_bound(const PointedBoundaryMap& pm, const ForestBridge& fb, Rng& rng, int sources,
                                     int targets);

/// counts[r] = |B(center, r)| for r = 0..r_max.
std::vector<std::int64_t> ball_volume_profile(const Graph& g, VertexId center, int r_max);
/// Same, counting only vertices flagged in `on_boundary`.
std::vector<std::int64_t> boundary_ball_profile(const Graph& g, const std::vector<char>& on_boundary,
                                                VertexId center, int r_max);
std::vector<char> boundary_mask(const BoundaryMap& map);

enum class DiameterMode { exact, double_sweep };
inline constexpr int kExactDiameterCap = 10000;
int diameter(const PlanarMap& map, DiameterMode mode, VertexId start = 0);

using Correspondence = std::vector<std::pair<int, int>>;

/// sup over pairs of pairs in R of |dX(x, y) - dY(x', y')|.
double correspondence_distortion(const std::function<double(int, int)>& dX, const std::function<double(int, int)>& dY,
                                 const Correspondence& R);

struct DistortionEstimate {
  double distortion = 0.0;
  std::int64_t sources = 0;  // pairs of R used as BFS sources
  bool exact = false;
};

inline constexpr int kExactDistortionCap = 2000;

/// Graph distortion of R. Exact when |V(X)| <= kExactDistortionCap or
/// `max_sources` covers R; otherwise uses `max_sources` random pairs of R as
/// sources against every pair of R.
DistortionEstimate graph_distortion(const PlanarMap& X, const PlanarMap& Y, const Correspondence& R, Rng* rng,
                                    int max_sources);

struct TreeComparison {
  PointedBoundaryMap map_from_forest;
  PointedBoundaryMap map_from_tree;
  int largest_tree = 0;     // zero-based tree index
  int tree_vertices = 0;
  int label_span = 0;       // max - min of shifted labels outside the tree interior
  Correspondence correspondence;
  DistortionEstimate distortion;
  double bound = 0.0;       // 4 * (label_span + 1)
};

/// The largest tree (first one on ties) with labels kept and bridge (0, bit).
ForestBridge largest_tree(const ForestBridge& fb, int bit);
/// label_span of `largest_tree_comparison` without building maps.
int outside_label_span(const ForestBridge& fb, int tree);
int largest_tree_index(const ForestShape& shape);

TreeComparison largest_tree_comparison(const ForestBridge& fb, int bit, Rng* rng = nullptr, int max_sources = 200);

}  // namespace qbmap

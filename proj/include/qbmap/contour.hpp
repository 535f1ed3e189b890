#pragma once

#include <vector>

#include "qbmap/bridge.hpp"
#include "qbmap/forest.hpp"

namespace qbmap {

/// Corner walk around the forest: 2n + sigma + 1 vertex ids, the last entry
/// being `shape.phantom()`.
std::vector<VertexId> facial_sequence(const ForestShape& shape);

struct ContourPair {
  std::vector<int> C;
  std::vector<int> L;

  int sigma() const { return C.empty() ? 0 : C.front(); }
  /// Running minimum of C over [0, i].
  std::vector<int> running_min() const;

  friend bool operator==(const ContourPair&, const ContourPair&) = default;
};

ContourPair contour_pair(const WellLabeledForest& wlf);
/// Inverse of `contour_pair`; throws std::invalid_argument on a pair that
/// does not come from a well-labeled forest.
WellLabeledForest forest_from_contour(const ContourPair& cp);

/// One-based index of the tree containing the vertex visited at step `i`.
int oldest_ancestor(const ContourPair& cp, int i);

/// Labels shifted tree by tree by the bridge, read along the facial sequence.
struct ShiftedLabelSequence {
  std::vector<int> values;  // 2n + sigma + 1 entries, last one at the phantom
  /// Minimum over the corners 0..2n+sigma-1, i.e. over actual map vertices.
  int min_value = 0;

  int corner_count() const { return static_cast<int>(values.size()) - 1; }
  /// values - min_value + 1 on the corners 0..2n+sigma-1.
  std::vector<int> normalized() const;
};

ShiftedLabelSequence shifted_labels(const WellLabeledForest& wlf, const Bridge& b);
/// Per-vertex shifted label l(u) + b(tree of u); entry `phantom()` is b(sigma).
std::vector<int> shifted_vertex_labels(const WellLabeledForest& wlf, const Bridge& b);

inline constexpr int kPointed = -1;

/// succ(i) for every corner of a normalized label sequence; `kPointed` where
/// the label is 1.
std::vector<int> successors(const std::vector<int>& normalized);
int successor(const std::vector<int>& normalized, int i);

}  // namespace qbmap

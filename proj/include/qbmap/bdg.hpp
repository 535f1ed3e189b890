#pragma once

#include "qbmap/bridge.hpp"
#include "qbmap/contour.hpp"
#include "qbmap/forest.hpp"
#include "qbmap/planar_map.hpp"

namespace qbmap {

/// Forest-and-bridge encoding of a pointed boundary quadrangulation.
///
/// In the output map, the vertex visited at corner i of the facial sequence
/// has id facial[i] (preorder id in the forest) and the pointed vertex has id
/// n + sigma. Half-edge i leaves corner i; K + i is its twin, K = 2n + sigma.
PointedBoundaryMap bdg_forward(const WellLabeledForest& wlf, const Bridge& b);

struct ForestBridge {
  WellLabeledForest forest;
  Bridge bridge;

  friend bool operator==(const ForestBridge&, const ForestBridge&) = default;
};

/// Inverse of `bdg_forward`. Throws std::invalid_argument when the input is
/// not a pointed quadrangulation with a boundary.
ForestBridge bdg_inverse(const PointedBoundaryMap& pq);

/// Graph distances from `source`, computed on the rotation system.
std::vector<int> map_distances(const PlanarMap& map, VertexId source);

}  // namespace qbmap

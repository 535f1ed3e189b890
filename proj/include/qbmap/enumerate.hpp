#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qbmap/bridge.hpp"
#include "qbmap/canonical.hpp"
#include "qbmap/forest.hpp"
#include "qbmap/planar_map.hpp"

namespace qbmap {

inline constexpr int kMaxBridgeSigma = 12;
inline constexpr int kMaxForestSize = 14;        // cap on 2n + sigma
inline constexpr int kMaxQuadrangulationSize = 10;

std::vector<Bridge> enumerate_bridges(int sigma);
void for_each_bridge(int sigma, const std::function<void(const Bridge&)>& fn);

/// Forest shapes in lexicographic order of their up/down contour word (down
/// before up).
std::vector<ForestShape> enumerate_forest_shapes(int n, int sigma);
/// Shapes in the order above, labelings by an odometer over tree edges in
/// preorder (last edge fastest, increments -1 < 0 < +1).
void for_each_forest(int n, int sigma, const std::function<void(const WellLabeledForest&)>& fn);
std::vector<WellLabeledForest> enumerate_forests(int n, int sigma);

struct EnumeratedMap {
  CanonicalCode code;
  BoundaryMap map;
  std::int64_t multiplicity;  // number of pointed preimages
};

/// Unpointed quadrangulations, sorted by canonical code.
std::vector<EnumeratedMap> enumerate_quadrangulations(int n, int sigma);

}  // namespace qbmap

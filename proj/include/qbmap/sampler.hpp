#pragma once

#include "qbmap/bdg.hpp"
#include "qbmap/bridge.hpp"
#include "qbmap/forest.hpp"
#include "qbmap/planar_map.hpp"
#include "qbmap/rng.hpp"

namespace qbmap {

Bridge sample_bridge(int sigma, Rng& rng);
/// Uniform over forests with sigma trees and n edges (cycle lemma).
ForestShape sample_forest_shape(int n, int sigma, Rng& rng);
WellLabeledForest sample_labels(const ForestShape& shape, Rng& rng);
/// Uniform (well-labeled forest, bridge) pair.
ForestBridge sample_encoding(int n, int sigma, Rng& rng);
/// Uniform pointed quadrangulation with n internal faces and boundary 2*sigma.
PointedBoundaryMap sample_quadrangulation(int n, int sigma, Rng& rng);

Bridge sample_bridge(int sigma, Seed seed);
ForestShape sample_forest_shape(int n, int sigma, Seed seed);
WellLabeledForest sample_labels(const ForestShape& shape, Seed seed);
PointedBoundaryMap sample_quadrangulation(int n, int sigma, Seed seed);

/// Start indices t of the rotations of a +-1 step sequence (sum -sigma) that
/// stay above -sigma until the last step.
std::vector<int> cycle_lemma_starts(const std::vector<int>& steps, int sigma);

}  // namespace qbmap

#pragma once

#include "qbmap/bdg.hpp"
#include <cmath>

#include "qbmap/forest.hpp"

namespace qbmap::test {

// One tree, root with one child labelled c.
inline WellLabeledForest single_edge(int c) { return WellLabeledForest(ForestShape::from_trees({{1, 0}}), {0, c}); }

inline double three_se(double p, int draws) { return 3.0 * std::sqrt(p * (1 - p) / draws); }

}  // namespace qbmap::test

#pragma once

#include <span>
#include <string>

#include "qbmap/planar_map.hpp"

namespace qbmap {

/// Byte string identifying a rooted map up to root- and orientation-preserving
/// isomorphism.
using CanonicalCode = std::string;

CanonicalCode canonical_code(const BoundaryMap& map);
CanonicalCode canonical_code(const PointedBoundaryMap& pm);
/// Rooted rotation system with a per-half-edge flag (e.g. distinguished edges).
CanonicalCode canonical_code(const PlanarMap& map, std::span<const char> flags);

}  // namespace qbmap

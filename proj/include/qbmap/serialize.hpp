#pragma once

#include <optional>

#include <json.hpp>

#include "qbmap/bdg.hpp"
#include "qbmap/planar_map.hpp"
#include "qbmap/saw.hpp"

namespace qbmap {

using Json = nlohmann::json;

Json map_to_json(const BoundaryMap& map, std::optional<VertexId> pointed = std::nullopt);
Json map_to_json(const PointedBoundaryMap& pm);
BoundaryMap map_from_json(const Json& j);
/// Requires a non-null "pointed" field.
PointedBoundaryMap pointed_map_from_json(const Json& j);

Json forest_bridge_to_json(const ForestBridge& fb);
ForestBridge forest_bridge_from_json(const Json& j);

Json saw_to_json(const SawConfiguration& cfg);
SawConfiguration saw_from_json(const Json& j);

}  // namespace qbmap

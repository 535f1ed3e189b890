#include "qbmap/serialize.hpp"

#include <stdexcept>

namespace qbmap {

namespace {

constexpr const char* kMapFormat = "bmap-v1";
constexpr const char* kSawFormat = "saw-v1";

void expect_format(const Json& j, const char* format) {
  if (!j.is_object() || j.value("format", "") != format)
    throw std::invalid_argument(std::string("expected a JSON object with format ") + format);
}

}  // namespace

Json map_to_json(const BoundaryMap& map, std::optional<VertexId> pointed) {
  Json j;
  j["format"] = kMapFormat;
  j["sigma"] = map.sigma();
  j["n"] = map.n();
  j["twin"] = std::vector<HalfEdgeId>(map.twins().begin(), map.twins().end());
  j["next"] = std::vector<HalfEdgeId>(map.nexts().begin(), map.nexts().end());
  j["root"] = map.root();
  if (pointed) j["pointed"] = *pointed;
  else j["pointed"] = nullptr;
  return j;
}

Json map_to_json(const PointedBoundaryMap& pm) { return map_to_json(pm.map, pm.pointed); }

BoundaryMap map_from_json(const Json& j) {
  expect_format(j, kMapFormat);
  BoundaryMap map(j.at("twin").get<std::vector<HalfEdgeId>>(), j.at("next").get<std::vector<HalfEdgeId>>(),
                  j.at("root").get<HalfEdgeId>());
  if (j.contains("sigma") && j["sigma"].get<int>() != map.sigma())
    throw std::invalid_argument("sigma field disagrees with the map");
  if (j.contains("n") && j["n"].get<int>() != map.n()) throw std::invalid_argument("n field disagrees with the map");
  return map;
}

PointedBoundaryMap pointed_map_from_json(const Json& j) {
  BoundaryMap map = map_from_json(j);
  if (!j.contains("pointed") || j["pointed"].is_null()) throw std::invalid_argument("map has no pointed vertex");
  return PointedBoundaryMap(std::move(map), j["pointed"].get<VertexId>());
}

Json forest_bridge_to_json(const ForestBridge& fb) {
  Json j;
  j["child_counts"] = fb.forest.shape().to_trees();
  j["labels"] = std::vector<Label>(fb.forest.labels().begin(), fb.forest.labels().end());
  j["bridge"] = std::vector<int>(fb.bridge.values().begin(), fb.bridge.values().end());
  return j;
}

ForestBridge forest_bridge_from_json(const Json& j) {
  ForestShape shape = ForestShape::from_trees(j.at("child_counts").get<std::vector<std::vector<int>>>());
  WellLabeledForest f(std::move(shape), j.at("labels").get<std::vector<Label>>());
  Bridge b(j.at("bridge").get<std::vector<int>>());
  if (b.sigma() != f.tree_count()) throw std::invalid_argument("forest and bridge disagree on sigma");
  return ForestBridge{std::move(f), std::move(b)};
}

Json saw_to_json(const SawConfiguration& cfg) {
  const PlanarMap& m = cfg.map();
  Json j;
  j["format"] = kSawFormat;
  j["sigma"] = cfg.sigma();
  j["n"] = cfg.n();
  j["twin"] = std::vector<HalfEdgeId>(m.twins().begin(), m.twins().end());
  j["next"] = std::vector<HalfEdgeId>(m.nexts().begin(), m.nexts().end());
  j["root"] = m.root();
  std::vector<HalfEdgeId> marked;
  for (HalfEdgeId h = 0; h < m.half_edge_count(); ++h)
    if (cfg.is_distinguished(h)) marked.push_back(h);
  j["distinguished"] = marked;
  return j;
}

SawConfiguration saw_from_json(const Json& j) {
  expect_format(j, kSawFormat);
  PlanarMap m(j.at("twin").get<std::vector<HalfEdgeId>>(), j.at("next").get<std::vector<HalfEdgeId>>(),
              j.at("root").get<HalfEdgeId>());
  std::vector<char> flags(static_cast<std::size_t>(m.half_edge_count()), 0);
  for (HalfEdgeId h : j.at("distinguished").get<std::vector<HalfEdgeId>>()) {
    if (h < 0 || h >= m.half_edge_count()) throw std::invalid_argument("distinguished half-edge out of range");
    flags[static_cast<std::size_t>(h)] = 1;
  }
  return SawConfiguration(std::move(m), std::move(flags));
}

}  // namespace qbmap

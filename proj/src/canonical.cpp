#include "qbmap/canonical.hpp"

#include <cstdint>
#include <vector>

namespace qbmap {

namespace {

void put(std::string& out, std::int32_t x) {
  const auto u = static_cast<std::uint32_t>(x);
  for (int s = 0; s < 32; s += 8) out.push_back(static_cast<char>((u >> s) & 0xffu));
}

// Breadth-first relabeling of half-edges from the root through next and twin.
std::vector<HalfEdgeId> bfs_order(const PlanarMap& map, std::vector<std::int32_t>& label) {
  const auto H = static_cast<std::size_t>(map.half_edge_count());
  label.assign(H, -1);
  std::vector<HalfEdgeId> order;
  order.reserve(H);
  label[static_cast<std::size_t>(map.root())] = 0;
  order.push_back(map.root());
  for (std::size_t head = 0; head < order.size(); ++head) {
    const HalfEdgeId h = order[head];
    for (HalfEdgeId x : {map.next(h), map.twin(h)}) {
      auto& l = label[static_cast<std::size_t>(x)];
      if (l < 0) {
        l = static_cast<std::int32_t>(order.size());
        order.push_back(x);
      }
    }
  }
  return order;
}

std::string encode(const PlanarMap& map, std::int32_t sigma, std::int32_t n, std::int32_t pointed,
                   std::span<const char> flags) {
  std::vector<std::int32_t> label;
  const auto order = bfs_order(map, label);
  std::string out;
  out.reserve(16 + order.size() * 9);
  put(out, sigma);
  put(out, n);
  put(out, static_cast<std::int32_t>(order.size()));
  for (HalfEdgeId h : order) {
    put(out, label[static_cast<std::size_t>(map.next(h))]);
    put(out, label[static_cast<std::size_t>(map.twin(h))]);
    if (!flags.empty()) out.push_back(flags[static_cast<std::size_t>(h)] ? 1 : 0);
  }
  if (pointed >= 0) {
    std::int32_t best = -1;
    for (HalfEdgeId h : order)
      if (map.origin(h) == pointed) {
        best = label[static_cast<std::size_t>(h)];
        break;
      }
    put(out, best);
  }
  return out;
}

}  // namespace

CanonicalCode canonical_code(const BoundaryMap& map) { return encode(map, map.sigma(), map.n(), -1, {}); }

CanonicalCode canonical_code(const PointedBoundaryMap& pm) {
  return encode(pm.map, pm.map.sigma(), pm.map.n(), pm.pointed, {});
}

CanonicalCode canonical_code(const PlanarMap& map, std::span<const char> flags) {
  return encode(map, -1, map.face_count(), -1, flags);
}

}  // namespace qbmap

#include "qbmap/saw.hpp"

#include <stdexcept>
#include <string>

namespace qbmap {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

}  // namespace

SawConfiguration::SawConfiguration(PlanarMap map, std::vector<char> distinguished)
    : map_(std::move(map)), distinguished_(std::move(distinguished)) {
  const int H = map_.half_edge_count();
  if (distinguished_.size() != ix(H)) throw std::invalid_argument("distinguished flags size mismatch");
  for (HalfEdgeId h = 0; h < H; ++h)
    if (is_distinguished(h) != is_distinguished(map_.twin(h)))
      throw std::invalid_argument("distinguished edge with an undistinguished twin");

  int half = 0, steps = 0, quads = 0;
  tiles_.resize(ix(map_.face_count()));
  for (int f = 0; f < map_.face_count(); ++f) {
    const int deg = map_.face_degree(f);
    std::vector<char> marks;
    HalfEdgeId g = map_.face_half_edge(f);
    for (int k = 0; k < deg; ++k, g = map_.face_step(g)) marks.push_back(is_distinguished(g) ? 1 : 0);
    int count = 0;
    for (char c : marks) count += c;
    if (deg == 2 && count == 1) {
      tiles_[ix(f)] = TileKind::half_step_tile;
      ++half;
    } else if (deg == 4 && count == 2 && marks[0] == marks[2]) {
      tiles_[ix(f)] = TileKind::step_tile;
      ++steps;
    } else if (deg == 4 && count == 0) {
      tiles_[ix(f)] = TileKind::quadrangle;
      ++quads;
    } else {
      throw std::invalid_argument("face " + std::to_string(f) + " is not a valid tile");
    }
  }
  if (half != 2) throw std::invalid_argument("configuration needs exactly two half-step tiles");
  sigma_ = steps + 1;
  n_ = quads;

  const HalfEdgeId root = map_.root();
  if (is_distinguished(root)) throw std::invalid_argument("root edge is distinguished");
  const int start = map_.left_face(root);
  if (tiles_[ix(start)] != TileKind::half_step_tile) throw std::invalid_argument("root is not on a half-step tile");

  // Follow the walk: leave each tile through a distinguished half-edge we did
  // not arrive by.
  std::vector<char> seen(ix(map_.face_count()), 0);
  int face = start;
  HalfEdgeId arrived = -1;
  for (;;) {
    if (seen[ix(face)]) throw std::invalid_argument("step tiles form a cycle");
    seen[ix(face)] = 1;
    walk_.push_back(face);
    HalfEdgeId out = -1;
    HalfEdgeId g = map_.face_half_edge(face);
    for (int k = 0; k < map_.face_degree(face); ++k, g = map_.face_step(g))
      if (is_distinguished(g) && g != arrived) out = g;
    if (out < 0) break;
    arrived = map_.twin(out);
    face = map_.face_of(arrived);
    if (tiles_[ix(face)] == TileKind::half_step_tile) {
      walk_.push_back(face);
      break;
    }
  }
  if (static_cast<int>(walk_.size()) != sigma_ + 1) throw std::invalid_argument("walk does not cover every step tile");
}

SawConfiguration quadrangulation_to_saw(const BoundaryMap& q) {
  const int H = q.half_edge_count();
  const int sigma = q.sigma();
  const auto g = q.boundary_walk();
  const int m = 2 * sigma;
  std::vector<HalfEdgeId> twin(q.twins().begin(), q.twins().end());
  std::vector<HalfEdgeId> next(q.nexts().begin(), q.nexts().end());
  twin.resize(ix(H + m));
  next.resize(ix(H + m));
  auto insert = [&](int corner, HalfEdgeId x) {
    next[ix(q.twin(g[ix(corner)]))] = x;
    next[ix(x)] = g[ix((corner + 1) % m)];
  };
  for (int j = 0; j < sigma; ++j) {
    const HalfEdgeId a = H + 2 * j;
    const HalfEdgeId b = a + 1;
    twin[ix(a)] = b;
    twin[ix(b)] = a;
    insert(j, a);
    insert(m - 1 - j, b);
  }
  std::vector<char> flags(ix(H + m), 0);
  for (int h = H; h < H + m; ++h) flags[ix(h)] = 1;
  return SawConfiguration(PlanarMap(std::move(twin), std::move(next), q.root()), std::move(flags));
}

BoundaryMap saw_to_quadrangulation(const SawConfiguration& cfg) {
  const PlanarMap& map = cfg.map();
  const int H = map.half_edge_count();
  std::vector<HalfEdgeId> next(map.nexts().begin(), map.nexts().end());
  std::vector<HalfEdgeId> prev(ix(H));
  for (HalfEdgeId h = 0; h < H; ++h) prev[ix(next[ix(h)])] = h;
  for (HalfEdgeId h = 0; h < H; ++h) {
    if (!cfg.is_distinguished(h)) continue;
    const HalfEdgeId p = prev[ix(h)], s = next[ix(h)];
    next[ix(p)] = s;
    prev[ix(s)] = p;
  }
  std::vector<HalfEdgeId> id(ix(H), -1);
  int kept = 0;
  for (HalfEdgeId h = 0; h < H; ++h)
    if (!cfg.is_distinguished(h)) id[ix(h)] = kept++;
  std::vector<HalfEdgeId> twin2(ix(kept)), next2(ix(kept));
  for (HalfEdgeId h = 0; h < H; ++h) {
    if (id[ix(h)] < 0) continue;
    twin2[ix(id[ix(h)])] = id[ix(map.twin(h))];
    next2[ix(id[ix(h)])] = id[ix(next[ix(h)])];
  }
  return BoundaryMap(std::move(twin2), std::move(next2), id[ix(map.root())]);
}

}  // namespace qbmap

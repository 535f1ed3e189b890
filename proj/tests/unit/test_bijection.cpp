#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "qbmap/bdg.hpp"
#include "qbmap/canonical.hpp"
#include "qbmap/contour.hpp"
#include "qbmap/enumerate.hpp"
#include "qbmap/sampler.hpp"
#include "qbmap/saw.hpp"

using namespace qbmap;

namespace {

int face_degree_count(const PlanarMap& m, int degree) {
  int k = 0;
  for (int f = 0; f < m.face_count(); ++f) k += m.face_degree(f) == degree;
  return k;
}

}  // namespace

TEST_CASE("forward map of the one-edge forest") {
  const auto pm = bdg_forward(test::single_edge(1), Bridge({0, 0}));
  const auto& m = pm.map;
  CHECK(m.vertex_count() == 3);
  CHECK(m.edge_count() == 3);
  CHECK(m.sigma() == 1);
  CHECK(m.n() == 1);
  CHECK(m.face_degree(m.external_face()) == 2);
  CHECK(face_degree_count(m, 4) == 1);
  CHECK(pm.pointed == 2);
  // A = 0, B = 1, v = 2
  std::multiset<std::pair<int, int>> edges;
  for (HalfEdgeId h = 0; h < m.half_edge_count(); ++h)
    if (h < m.twin(h)) edges.insert(std::minmax(m.origin(h), m.target(h)));
  CHECK(edges == std::multiset<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 2}});
  CHECK(m.origin(m.root()) == 0);
  CHECK(m.target(m.root()) == 2);

  const auto d = map_distances(m, pm.pointed);
  CHECK(d == std::vector<int>{1, 2, 0});

  const auto back = bdg_inverse(pm);
  CHECK(back.forest == test::single_edge(1));
  CHECK(back.bridge == Bridge({0, 0}));
}

TEST_CASE("forward map with no edges") {
  const auto pm = bdg_forward(WellLabeledForest(ForestShape::bare(1), {0}), Bridge({0, 0}));
  CHECK(pm.map.vertex_count() == 2);
  CHECK(pm.map.face_count() == 1);
  CHECK(pm.map.face_degree(pm.map.external_face()) == 2);
  CHECK(bdg_inverse(pm) == ForestBridge{WellLabeledForest(ForestShape::bare(1), {0}), Bridge({0, 0})});
}

TEST_CASE("forward images at (3, 2)") {
  const auto bridges = enumerate_bridges(2);
  std::int64_t count = 0;
  for_each_forest(3, 2, [&](const WellLabeledForest& f) {
    for (const auto& b : bridges) {
      const auto pm = bdg_forward(f, b);
      ++count;
      CHECK(pm.map.n() == 3);
      CHECK(pm.map.sigma() == 2);
      CHECK(pm.map.vertex_count() == 6);
      CHECK(face_degree_count(pm.map, 4) == 4);  // external face has degree 4 too
    }
  });
  CHECK(count == 378 * 6);
}

TEST_CASE("roundtrip on every small instance") {
  for (int sigma = 1; sigma <= 8; ++sigma) {
    const auto bridges = enumerate_bridges(sigma);
    for (int n = 0; 2 * n + sigma <= 8; ++n)
      for_each_forest(n, sigma, [&](const WellLabeledForest& f) {
        for (const auto& b : bridges) {
          const auto pm = bdg_forward(f, b);
          const auto back = bdg_inverse(pm);
          REQUIRE(back.forest == f);
          REQUIRE(back.bridge == b);
        }
      });
  }
}

TEST_CASE("roundtrip on random instances") {
  for (int r = 0; r < 50; ++r) {
    Rng rng(Seed{11, static_cast<std::uint64_t>(r)});
    const auto fb = sample_encoding(500, 31, rng);
    CHECK(bdg_inverse(bdg_forward(fb.forest, fb.bridge)) == fb);
  }
}

TEST_CASE("inverse rejects non-quadrangulations") {
  const auto pm = bdg_forward(test::single_edge(1), Bridge({0, 0}));
  CHECK_THROWS_AS(PointedBoundaryMap(pm.map, 7), std::invalid_argument);
  // a triangle with a boundary of length 3 is not a valid boundary map
  CHECK_THROWS_AS(BoundaryMap({3, 4, 5, 0, 1, 2}, {5, 3, 4, 1, 2, 0}, 0), std::invalid_argument);
}

TEST_CASE("label equals distance to the pointed vertex") {
  for (int r = 0; r < 20; ++r) {
    Rng rng(Seed{5, static_cast<std::uint64_t>(r)});
    const auto fb = sample_encoding(300, 12, rng);
    const auto pm = bdg_forward(fb.forest, fb.bridge);
    const auto d = map_distances(pm.map, pm.pointed);
    const auto lt = shifted_labels(fb.forest, fb.bridge).normalized();
    const auto facial = facial_sequence(fb.forest.shape());
    CHECK(d[static_cast<std::size_t>(pm.pointed)] == 0);
    for (std::size_t i = 0; i < lt.size(); ++i) REQUIRE(d[static_cast<std::size_t>(facial[i])] == lt[i]);
  }
}

TEST_CASE("canonical codes") {
  const auto q = enumerate_quadrangulations(1, 1);
  REQUIRE(q.size() == 2);
  CHECK(q[0].code != q[1].code);
  CHECK(q[0].multiplicity == 3);
  CHECK(q[1].multiplicity == 3);

  // relabel half-edges by a fixed permutation
  Rng rng(Seed{3, 0});
  const auto pm = sample_quadrangulation(40, 5, rng);
  const auto& m = pm.map;
  const int H = m.half_edge_count();
  std::vector<int> perm(static_cast<std::size_t>(H));
  for (int i = 0; i < H; ++i) perm[static_cast<std::size_t>(i)] = (i * 7 + 3) % H;
  REQUIRE(std::gcd(7, H) == 1);
  std::vector<HalfEdgeId> twin(perm.size()), next(perm.size());
  for (int h = 0; h < H; ++h) {
    twin[static_cast<std::size_t>(perm[h])] = perm[static_cast<std::size_t>(m.twin(h))];
    next[static_cast<std::size_t>(perm[h])] = perm[static_cast<std::size_t>(m.next(h))];
  }
  const BoundaryMap relabeled(twin, next, perm[static_cast<std::size_t>(m.root())]);
  CHECK(canonical_code(relabeled) == canonical_code(m));
  const HalfEdgeId other = m.twin(m.boundary_walk()[1]);
  CHECK(canonical_code(BoundaryMap(twin, next, perm[static_cast<std::size_t>(other)])) != canonical_code(m));
}

TEST_CASE("saw configuration of the smallest maps") {
  const auto q = enumerate_quadrangulations(1, 1);
  std::set<CanonicalCode> codes;
  for (const auto& e : q) {
    const auto cfg = quadrangulation_to_saw(e.map);
    CHECK(cfg.sigma() == 1);
    CHECK(cfg.n() == 1);
    int half = 0, step = 0, quad = 0;
    for (int f = 0; f < cfg.map().face_count(); ++f) {
      switch (cfg.tile(f)) {
        case TileKind::half_step_tile: ++half; CHECK(cfg.map().face_degree(f) == 2); break;
        case TileKind::step_tile: ++step; break;
        case TileKind::quadrangle: ++quad; break;
      }
    }
    CHECK(half == 2);
    CHECK(step == 0);
    CHECK(quad == 1);
    codes.insert(canonical_code(saw_to_quadrangulation(cfg)));
  }
  CHECK(codes.size() == 2);
}

TEST_CASE("saw census and roundtrip") {
  auto check = [](const BoundaryMap& q) {
    const auto cfg = quadrangulation_to_saw(q);
    int half = 0, step = 0, quad = 0;
    for (int f = 0; f < cfg.map().face_count(); ++f) {
      const auto t = cfg.tile(f);
      half += t == TileKind::half_step_tile;
      step += t == TileKind::step_tile;
      quad += t == TileKind::quadrangle;
    }
    CHECK(half == 2);
    CHECK(step == q.sigma() - 1);
    CHECK(quad == q.n());
    const auto marked = std::count(cfg.distinguished().begin(), cfg.distinguished().end(), 1);
    CHECK(marked == 2 * q.sigma());
    CHECK(saw_to_quadrangulation(cfg) == q);
  };
  for (int sigma = 1; sigma <= 8; ++sigma)
    for (int n = 0; 2 * n + sigma <= 8; ++n)
      for (const auto& e : enumerate_quadrangulations(n, sigma)) check(e.map);
  for (int r = 0; r < 20; ++r) check(sample_quadrangulation(200, 20, Seed{9, static_cast<std::uint64_t>(r)}).map);
}

TEST_CASE("saw configuration validation") {
  const auto cfg = quadrangulation_to_saw(sample_quadrangulation(30, 4, Seed{1, 1}).map);
  auto flags = cfg.distinguished();
  const auto h = static_cast<std::size_t>(std::find(flags.begin(), flags.end(), 1) - flags.begin());
  flags[h] = 0;
  CHECK_THROWS_AS(SawConfiguration(cfg.map(), flags), std::invalid_argument);
  flags[static_cast<std::size_t>(cfg.map().twin(static_cast<HalfEdgeId>(h)))] = 0;
  CHECK_THROWS_AS(SawConfiguration(cfg.map(), flags), std::invalid_argument);
}

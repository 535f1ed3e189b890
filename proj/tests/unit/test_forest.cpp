#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "qbmap/bridge.hpp"
#include "qbmap/contour.hpp"
#include "qbmap/counting.hpp"
#include "qbmap/enumerate.hpp"

using namespace qbmap;

TEST_CASE("facial sequence") {
  const auto one = ForestShape::from_trees({{1, 0}});
  CHECK(facial_sequence(one) == std::vector<VertexId>{0, 1, 0, 2});
  CHECK(facial_sequence(ForestShape::bare(2)) == std::vector<VertexId>{0, 1, 2});

  // seven trees, twenty edges
  const auto big = ForestShape::from_trees({{3, 0, 2, 0, 0, 1, 0}, {0}, {1, 1, 1, 0}, {2, 0, 2, 1, 0, 0},
                                            {0}, {1, 2, 1, 0, 1, 0}, {1, 0}});
  REQUIRE(big.tree_count() == 7);
  REQUIRE(big.edge_count() == 20);
  CHECK(facial_sequence(big).size() == 48);
}

TEST_CASE("forest shape accessors") {
  const auto s = ForestShape::from_trees({{2, 1, 0, 0}, {0}});
  CHECK(s.vertex_count() == 5);
  CHECK(s.corner_count() == 8);
  CHECK(s.parent(2) == 1);
  CHECK(s.depth(2) == 2);
  CHECK(s.tree_of(4) == 1);
  CHECK(s.tree_of(s.phantom()) == 2);
  CHECK(s.is_floor(4));
  CHECK(s.to_trees() == std::vector<std::vector<int>>{{2, 1, 0, 0}, {0}});
  CHECK_THROWS_AS(ForestShape::from_trees({{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(ForestShape::from_preorder(2, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(WellLabeledForest(ForestShape::from_trees({{1, 0}}), {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(WellLabeledForest(ForestShape::from_trees({{1, 0}}), {1, 1}), std::invalid_argument);
}

TEST_CASE("contour pair") {
  for (int c = -1; c <= 1; ++c) {
    const auto cp = contour_pair(test::single_edge(c));
    CHECK(cp.C == std::vector<int>{1, 2, 1, 0});
    CHECK(cp.L == std::vector<int>{0, c, 0, 0});
  }
  const auto bare = contour_pair(WellLabeledForest(ForestShape::bare(3), {0, 0, 0}));
  CHECK(bare.C == std::vector<int>{3, 2, 1, 0});
  CHECK(bare.L == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("contour roundtrip on every small forest") {
  std::int64_t count = 0;
  BigInt expected = 0;
  for (int sigma = 1; sigma <= 8; ++sigma)
    for (int n = 0; 2 * n + sigma <= 8; ++n) {
      expected += count_forests(n, sigma);
      for_each_forest(n, sigma, [&](const WellLabeledForest& f) {
        ++count;
        CHECK(forest_from_contour(contour_pair(f)) == f);
      });
    }
  CHECK(BigInt(count) == expected);
}

TEST_CASE("forest_from_contour rejects bad pairs") {
  CHECK_THROWS_AS(forest_from_contour(ContourPair{{1, 3, 1, 0}, {0, 0, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(forest_from_contour(ContourPair{{1, 2, 1, 0}, {0, 2, 0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(forest_from_contour(ContourPair{{1, 2, 1, 1}, {0, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("oldest ancestor") {
  const auto cp = contour_pair(test::single_edge(1));
  CHECK(oldest_ancestor(cp, 0) == 1);
  CHECK(oldest_ancestor(cp, 1) == 1);
  const auto bare = contour_pair(WellLabeledForest(ForestShape::bare(3), {0, 0, 0}));
  CHECK(oldest_ancestor(bare, 0) == 1);
  CHECK(oldest_ancestor(bare, 2) == 3);
}

TEST_CASE("bridges and +-1 sequences") {
  CHECK(bridge_to_pm1(Bridge({0, 0})) == std::vector<int>{-1, 1});
  CHECK(bridge_to_pm1(Bridge({0, -1})) == std::vector<int>{1, -1});
  const auto all = enumerate_bridges(2);
  CHECK(all.size() == 6);
  for (const auto& b : all) {
    const auto pm = bridge_to_pm1(b);
    CHECK(pm.size() == 4);
    CHECK(pm1_to_bridge(pm) == b);
  }
  CHECK_THROWS_AS(Bridge({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Bridge({0, -2}), std::invalid_argument);
  CHECK_THROWS_AS(Bridge({0, 1}), std::invalid_argument);
}

TEST_CASE("bridge enumeration sizes") {
  const auto one = enumerate_bridges(1);
  REQUIRE(one.size() == 2);
  CHECK(std::count(one.begin(), one.end(), Bridge({0, 0})) == 1);
  CHECK(std::count(one.begin(), one.end(), Bridge({0, -1})) == 1);
  CHECK(enumerate_bridges(3).size() == 20);
}

TEST_CASE("shifted labels") {
  const auto f = test::single_edge(1);
  CHECK(shifted_labels(f, Bridge({0, 0})).values == std::vector<int>{0, 1, 0, 0});
  CHECK(shifted_labels(f, Bridge({0, -1})).values == std::vector<int>{0, 1, 0, -1});
  for (int c = -1; c <= 1; ++c) {
    const auto g = test::single_edge(c);
    CHECK(shifted_labels(g, Bridge::zero(1)).values == contour_pair(g).L);
  }
  // minimum ignores the closing floor corner
  const auto s = shifted_labels(f, Bridge({0, -1}));
  CHECK(s.min_value == 0);
  CHECK(s.normalized() == std::vector<int>{1, 2, 1});
  CHECK(shifted_vertex_labels(f, Bridge({0, -1})) == std::vector<int>{0, 1, -1});
}

TEST_CASE("successors") {
  const std::vector<int> lt{1, 2, 1, 1};
  const auto succ = successors(lt);
  CHECK(succ[0] == kPointed);
  CHECK(succ[1] == 2);
  CHECK(succ[2] == kPointed);
  for (std::size_t i = 0; i < lt.size(); ++i) CHECK(succ[i] == successor(lt, static_cast<int>(i)));

  const std::vector<int> wave{1, 2, 3, 2, 3, 4, 3, 2, 1, 2};
  const auto s2 = successors(wave);
  for (std::size_t i = 0; i < wave.size(); ++i) CHECK(s2[i] == successor(wave, static_cast<int>(i)));
}

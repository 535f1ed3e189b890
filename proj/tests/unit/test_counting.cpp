#include <doctest.h>

#include "qbmap/counting.hpp"
#include "qbmap/enumerate.hpp"

using namespace qbmap;

TEST_CASE("closed formulas") {
  CHECK(count_quadrangulations(1, 1) == 2);
  CHECK(count_quadrangulations(0, 1) == 1);
  CHECK(count_quadrangulations(1, 2) == 9);
  CHECK(count_bridges(2) == 6);
  CHECK(count_bridges(3) == 20);
  CHECK(count_forests(1, 1) == 3);
  CHECK(count_forests(2, 1) == 18);
  CHECK(count_forests(0, 5) == 1);
  CHECK(count_formula('Q', 1, 1) == 2);
  CHECK(count_formula('B', 0, 3) == 20);
  CHECK(count_formula('F', 2, 1) == 18);
  CHECK_THROWS_AS(count_formula('X', 1, 1), std::invalid_argument);
  CHECK(binomial(10, 3) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(count_quadrangulations(200, 30) > BigInt(1) << 400);
}

TEST_CASE("enumeration matches formulas") {
  for (int sigma = 1; sigma <= 8; ++sigma) {
    CHECK(BigInt(enumerate_bridges(sigma).size()) == count_bridges(sigma));
    for (int n = 0; 2 * n + sigma <= 8; ++n) {
      CHECK(BigInt(enumerate_forests(n, sigma).size()) == count_forests(n, sigma));
      const auto q = enumerate_quadrangulations(n, sigma);
      CHECK(BigInt(q.size()) == count_quadrangulations(n, sigma));
      for (const auto& e : q) CHECK(e.multiplicity == n + sigma + 1);
    }
  }
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_bridges(kMaxBridgeSigma + 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_quadrangulations(5, 1), std::invalid_argument);
}

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "qbmap/contour.hpp"
#include "qbmap/lab.hpp"
#include "qbmap/metrics.hpp"
#include "qbmap/sampler.hpp"
#include "qbmap/stats.hpp"

using namespace qbmap;

TEST_CASE("sigma rules") {
  CHECK(gamma_constant() == doctest::Approx(std::pow(8.0 / 9.0, 0.25)));
  CHECK(SigmaRule::parse("sqrt")(500000) == 1000);
  CHECK(SigmaRule::parse("sqrt:0.5")(500000) == 500);
  CHECK(SigmaRule::parse("quarter")(1 << 16) == 16);
  CHECK(SigmaRule::parse("three-quarter")(1 << 16) == 4096);
  CHECK(SigmaRule::parse("fixed:3")(1000) == 3);
  CHECK(SigmaRule::parse(SigmaRule::parse("sqrt:2").describe()).factor == 2.0);
  CHECK_THROWS_AS(SigmaRule::parse("cubic"), std::invalid_argument);
  CHECK_THROWS_AS(SigmaRule::parse("fixed:0"), std::invalid_argument);
}

TEST_CASE("rescaled processes") {
  Rng rng(Seed{31, 0});
  const int n = 4000, sigma = 89;
  const auto fb = sample_encoding(n, sigma, rng);
  const auto r = rescale(fb, 257);
  CHECK(r.C.front() == doctest::Approx(sigma / std::sqrt(2.0 * n)));
  CHECK(r.C.back() <= 1.0 / std::sqrt(2.0 * n) + 1e-15);
  CHECK(r.bridge.front() == 0.0);
  CHECK(r.C_inf.front() == 1.0);

  // at lattice times the shifted process is the rescaled shifted label
  const int K = fb.forest.shape().corner_count();
  const auto direct = shifted_labels(fb.forest, fb.bridge).values;
  const auto full = rescale(fb, K);
  const double scale = gamma_constant() * std::pow(double(n), 0.25);
  double worst = 0;
  for (int i = 0; i < K; ++i) {
    const double x = (K - 1) * full.grid[static_cast<std::size_t>(i)];
    if (std::abs(x - std::round(x)) > 1e-9) continue;
    worst = std::max(worst, std::abs(full.shifted[static_cast<std::size_t>(i)] -
                                     direct[static_cast<std::size_t>(std::lround(x))] / scale));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("interpolation") {
  const std::vector<int> s{0, 2, -2};
  CHECK(interpolate(s, 0.5) == 1.0);
  CHECK(interpolate(s, 1.25) == 1.0);
  CHECK(interpolate(s, 2.0) == -2.0);
}

TEST_CASE("vervaat") {
  CHECK(vervaat({0, 1, -1, 0}) == std::vector<double>{0, 1, 2, 0});
  CHECK(vervaat_reference({0, 1, -1, 0}) == std::vector<double>{0, 1, 2, 0});
  Rng rng(Seed{32, 0});
  for (int r = 0; r < 200; ++r) {
    const auto b = sample_bridge(1 + static_cast<int>(rng.below(30)), rng);
    const std::vector<double> path(b.values().begin(), b.values().end());
    const auto fast = vervaat(path);
    const auto ref = vervaat_reference(path);
    REQUIRE(fast.size() == ref.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i] == doctest::Approx(ref[i]).epsilon(1e-12));
      CHECK(fast[i] >= -1e-12);
    }
    CHECK(fast.front() == 0.0);
    CHECK(fast.back() == 0.0);
  }
}

TEST_CASE("bridge pseudo-distance") {
  const Bridge b({0, 1, 0, 2, 1, 0});
  for (int s = 0; s < b.sigma(); ++s) CHECK(bridge_distance(b, s, s) == 0);
  CHECK(bridge_distance(b, 0, 1) == bridge_distance(b, 1, 0));
  CHECK(bridge_distance(b, 1, 3) >= 0);
}

TEST_CASE("degenerate sigma-zero bound") {
  // single tree with zero bridge: nothing outside the tree interior but the floor
  Rng rng(Seed{33, 0});
  const auto shape = sample_forest_shape(300, 1, rng);
  const ForestBridge fb{sample_labels(shape, rng), Bridge({0, 0})};
  CHECK(outside_label_span(fb, 0) == 0);
}

TEST_CASE("statistics") {
  NeumaierSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);

  const std::vector<double> xs{4, 1, 3, 2, 5};
  const auto sm = summarize(xs);
  CHECK(sm.count == 5);
  CHECK(sm.mean == 3.0);
  CHECK(sm.variance == 2.5);
  CHECK(sm.median == 3.0);
  CHECK(sm.q25 == 2.0);
  CHECK(quantile({1, 2}, 0.5) == 1.5);
  CHECK(median(std::vector<double>{1, 2, 3, 10}) == 2.5);

  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto fit = fit_line(x, y);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  CHECK(fit.slope_std_error == doctest::Approx(0.0));
  CHECK(strictly_decreasing(std::vector<double>{3, 2, 1}));
  CHECK_FALSE(strictly_decreasing(std::vector<double>{3, 3, 1}));
}

TEST_CASE("experiment output shape") {
  ExperimentConfig cfg;
  cfg.name = "bridge-variance";
  cfg.n = {200, 800};
  cfg.replicas = 30;
  cfg.seed = 4;
  cfg.threads = 2;
  const auto res = run_experiment(cfg);
  CHECK(res.rows.size() == 60);
  const auto j = res.to_json();
  CHECK(j.contains("status"));
  CHECK(j.contains("failed_checks"));
  CHECK(j["rng"] == Rng::kIdentifier);
  const auto csv = res.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 62);

  cfg.threads = 1;
  CHECK(run_experiment(cfg).to_csv() == csv);

  cfg.name = "nope";
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  CHECK(experiment_names().size() == 5);
}

TEST_CASE("small experiments run") {
  for (const auto& name : experiment_names()) {
    ExperimentConfig cfg;
    cfg.name = name;
    cfg.n = {256, 1024};
    cfg.replicas = 4;
    cfg.sigma_rule = name == "sigma-zero" ? SigmaRule::parse("quarter")
                     : name == "sigma-infinity" ? SigmaRule::parse("three-quarter")
                                                : SigmaRule::parse("sqrt");
    cfg.grid_points = 64;
    const auto res = run_experiment(cfg);
    CHECK(res.rows.size() == 8);
    CHECK(res.to_json()["id"] == name);
  }
}

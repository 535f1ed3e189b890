// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qbmap/bdg.hpp"
#include "qbmap/contour.hpp"
#include "qbmap/counting.hpp"
#include "qbmap/enumerate.hpp"
#include "qbmap/lab.hpp"
#include "qbmap/metrics.hpp"
#include "qbmap/sampler.hpp"
#include "qbmap/saw.hpp"

using namespace qbmap;

namespace {

constexpr std::uint64_t kSeedBase = 20261017;

int threads() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

int sqrt_sigma(int n) { return static_cast<int>(std::floor(std::sqrt(2.0 * n))); }

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    ok = false;
    note << "[" << why << "] ";
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : " | ") + x;
  return s;
}

template <class F>
void each_small_size(F&& f) {
  for (int sigma = 1; sigma <= 8; ++sigma)
    for (int n = 0; 2 * n + sigma <= 8; ++n) f(n, sigma);
}

void counts(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  int cells = 0;
  each_small_size([&](int n, int sigma) {
    ++cells;
    if (BigInt(enumerate_forests(n, sigma).size()) != count_forests(n, sigma))
      o.fail("forests at (" + std::to_string(n) + "," + std::to_string(sigma) + ")");
    if (BigInt(enumerate_bridges(sigma).size()) != count_bridges(sigma)) o.fail("bridges at sigma " + std::to_string(sigma));
    if (BigInt(enumerate_quadrangulations(n, sigma).size()) != count_quadrangulations(n, sigma))
      o.fail("quadrangulations at (" + std::to_string(n) + "," + std::to_string(sigma) + ")");
  });
  if (enumerate_quadrangulations(1, 1).size() != 2) o.fail("|Q(1,1)| != 2");
  if (enumerate_bridges(2).size() != 6) o.fail("|B(2)| != 6");
  if (enumerate_forests(1, 1).size() != 3) o.fail("|F(1,1)| != 3");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 60) o.fail("runtime " + std::to_string(secs) + " s");
  o.note << cells << " (n,sigma) cells, " << secs << " s";
}

void bijectivity(Outcome& o) {
  std::int64_t exhaustive = 0;
  each_small_size([&](int n, int sigma) {
    const auto bridges = enumerate_bridges(sigma);
    for_each_forest(n, sigma, [&](const WellLabeledForest& f) {
      for (const auto& b : bridges) {
        ++exhaustive;
        const auto pm = bdg_forward(f, b);
        const auto back = bdg_inverse(pm);
        if (!(back.forest == f && back.bridge == b) || bdg_forward(back.forest, back.bridge) != pm)
          o.fail("roundtrip at (" + std::to_string(n) + "," + std::to_string(sigma) + ")");
      }
    });
    for (const auto& e : enumerate_quadrangulations(n, sigma))
      if (e.multiplicity != n + sigma + 1) o.fail("multiplicity at (" + std::to_string(n) + "," + std::to_string(sigma) + ")");
  });
  const int n = 10000, sigma = sqrt_sigma(n);
  for (int r = 0; r < 1000; ++r) {
    Rng rng(Seed{kSeedBase + 2, static_cast<std::uint64_t>(r)});
    const auto fb = sample_encoding(n, sigma, rng);
    const auto pm = bdg_forward(fb.forest, fb.bridge);
    if (!(bdg_inverse(pm) == fb)) o.fail("random roundtrip replica " + std::to_string(r));
  }
  o.note << exhaustive << " exhaustive pairs, 1000 random at n=" << n << " sigma=" << sigma;
}

void label_distance(Outcome& o) {
  const int n = 1000, sigma = sqrt_sigma(n);
  std::int64_t vertices = 0;
  for (int r = 0; r < 100; ++r) {
    Rng rng(Seed{kSeedBase + 3, static_cast<std::uint64_t>(r)});
    const auto fb = sample_encoding(n, sigma, rng);
    const auto pm = bdg_forward(fb.forest, fb.bridge);
    const auto dist = map_distances(pm.map, pm.pointed);
    const auto lt = shifted_labels(fb.forest, fb.bridge).normalized();
    const auto facial = facial_sequence(fb.forest.shape());
    for (std::size_t i = 0; i < lt.size(); ++i)
      if (dist[static_cast<std::size_t>(facial[i])] != lt[i]) {
        o.fail("replica " + std::to_string(r) + " corner " + std::to_string(i));
        break;
      }
    vertices += pm.map.vertex_count();
  }
  o.note << "100 maps at n=" << n << ", " << vertices << " vertices";
}

void distance_bounds(Outcome& o) {
  const int n = 100000, sigma = sqrt_sigma(n);
  std::int64_t pairs = 0, up_viol = 0, low_viol = 0;
  for (int r = 0; r < 20; ++r) {
    Rng rng(Seed{kSeedBase + 4, static_cast<std::uint64_t>(r)});
    const auto fb = sample_encoding(n, sigma, rng);
    const auto [up, low] = check_distance_bounds(bdg_forward(fb.forest, fb.bridge), fb, rng, 100, 100);
    pairs += up.pairs;
    up_viol += up.violations;
    low_viol += low.violations;
  }
  if (up_viol) o.fail(std::to_string(up_viol) + " upper-bound violations");
  if (low_viol) o.fail(std::to_string(low_viol) + " lower-bound violations");
  o.note << pairs << " pairs over 20 maps at n=" << n;
}

ExperimentConfig config(const std::string& name, std::vector<int> n, const std::string& rule, int reps, int k) {
  ExperimentConfig cfg;
  cfg.name = name;
  cfg.n = std::move(n);
  cfg.sigma_rule = SigmaRule::parse(rule);
  cfg.replicas = reps;
  cfg.seed = kSeedBase + static_cast<std::uint64_t>(k);
  cfg.threads = threads();
  return cfg;
}

// Summary numbers: plain values as is, summaries by their mean.
void record(Outcome& o, const ExperimentResult& res, const std::vector<std::string>& keys) {
  if (!res.passed()) o.fail(join(res.failed_checks));
  const auto& st = res.statistics;
  o.note.precision(4);
  if (st.contains("cells"))
    for (const auto& cell : st["cells"]) {
      o.note << "n=" << cell["n"].get<int>() << "[";
      for (const auto& k : keys)
        if (cell.contains(k)) {
          const auto& v = cell[k];
          o.note << " " << k << "=" << (v.is_object() ? v["mean"].get<double>() : v.get<double>());
        }
      o.note << " ] ";
    }
  if (st.contains("trend"))
    for (const auto& [k, t] : st["trend"].items()) {
      o.note << k << " medians";
      for (const auto& m : t["medians"]) o.note << " " << m.get<double>();
      o.note << " ";
    }
  o.note << "(" << res.runtime_seconds << " s)";
}

void bridge_moment(Outcome& o) {
  const auto res = run_experiment(config("bridge-variance", {100000}, "sqrt", 10000, 5));
  record(o, res, {"variance_relative_error"});
}

void dimension(Outcome& o) {
  const auto res = run_experiment(config("dimension", {500000}, "sqrt:1", 50, 6));
  record(o, res, {"bulk_slope", "boundary_slope"});
  if (res.runtime_seconds > 1800) o.fail("runtime above 30 minutes");
}

void sigma_zero(Outcome& o) {
  const auto res = run_experiment(config("sigma-zero", {1 << 12, 1 << 14, 1 << 16}, "quarter", 50, 7));
  record(o, res, {});
}

void sigma_infinity(Outcome& o) {
  const auto gap = run_experiment(config("sigma-infinity", {100000}, "three-quarter", 50, 8));
  record(o, gap, {"sup_contour_gap"});
  o.note << "; ";
  const auto trend = run_experiment(config("sigma-infinity", {1 << 14, 1 << 16, 1 << 18}, "three-quarter", 50, 8));
  record(o, trend, {"distortion"});
}

void saw(Outcome& o) {
  auto check = [&](const BoundaryMap& q, const std::string& where) {
    const auto cfg = quadrangulation_to_saw(q);
    int half = 0, step = 0, quad = 0;
    for (int f = 0; f < cfg.map().face_count(); ++f) {
      const auto t = cfg.tile(f);
      half += t == TileKind::half_step_tile;
      step += t == TileKind::step_tile;
      quad += t == TileKind::quadrangle;
    }
    if (half != 2 || step != q.sigma() - 1 || quad != q.n()) o.fail("census at " + where);
    const auto back = saw_to_quadrangulation(cfg);
    if (!(back == q) || !(quadrangulation_to_saw(back) == cfg)) o.fail("roundtrip at " + where);
  };
  std::int64_t maps = 0;
  each_small_size([&](int n, int sigma) {
    for (const auto& e : enumerate_quadrangulations(n, sigma)) {
      ++maps;
      check(e.map, "(" + std::to_string(n) + "," + std::to_string(sigma) + ")");
    }
  });
  for (int r = 0; r < 1000; ++r)
    check(sample_quadrangulation(1000, 20, Seed{kSeedBase + 9, static_cast<std::uint64_t>(r)}).map,
          "replica " + std::to_string(r));
  o.note << maps << " enumerated maps, 1000 random at n=1000 sigma=20";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"exact counts for 2n+sigma <= 8", counts},
      {"bijection roundtrips and pointed multiplicity", bijectivity},
      {"label equals distance from the pointed vertex", label_distance},
      {"upper and lower label distance bounds", distance_bounds},
      {"bridge midpoint variance and endpoint law", bridge_moment},
      {"bulk and boundary ball-growth exponents", dimension},
      {"small-boundary regime trends", sigma_zero},
      {"large-boundary regime contour gap and label trend", sigma_infinity},
      {"self-avoiding walk configuration bijection", saw},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.ok;
    std::printf("%s criterion %zu: %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}

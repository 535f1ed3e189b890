#include "qbmap/lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qbmap/contour.hpp"
#include "qbmap/metrics.hpp"
#include "qbmap/rng.hpp"
#include "qbmap/sampler.hpp"
#include "qbmap/stats.hpp"
#include "qbmap/version.hpp"

namespace qbmap {

using nlohmann::json;

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

Seed replica_seed(std::uint64_t master, std::size_t cell, int replica) {
  return Seed{master, (static_cast<std::uint64_t>(cell) << 32) | static_cast<std::uint32_t>(replica)};
}

// Runs fn(0..count-1) on up to `threads` workers; results keep index order.
std::vector<json> run_replicas(int count, int threads, const std::function<json(int)>& fn) {
  std::vector<json> out(ix(count));
  const int workers = std::max(1, std::min(threads, count));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    for (int i = next++; i < count; i = next++) {
      try {
        out[ix(i)] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<double> column(const std::vector<json>& rows, const char* key) {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r.at(key).get<double>());
  return v;
}

json summary_json(const Summary& s) {
  return json{{"count", s.count}, {"mean", s.mean},     {"variance", s.variance}, {"std_error", s.std_error},
              {"min", s.min},     {"q25", s.q25},       {"median", s.median},     {"q75", s.q75},
              {"max", s.max}};
}

json parameters_json(const ExperimentConfig& cfg) {
  return json{{"name", cfg.name},
              {"n", cfg.n},
              {"sigma_rule", cfg.sigma_rule.describe()},
              {"replicas", cfg.replicas},
              {"seed", cfg.seed},
              {"threads", cfg.threads},
              {"grid_points", cfg.grid_points},
              {"centers", cfg.centers},
              {"sources", cfg.sources},
              {"targets", cfg.targets}};
}

double scale_labels(int n) { return gamma_constant() * std::pow(static_cast<double>(n), 0.25); }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

ExperimentResult start_result(const ExperimentConfig& cfg, const char* id) {
  if (cfg.n.empty()) throw std::invalid_argument("experiment needs at least one n");
  if (cfg.replicas < 1) throw std::invalid_argument("experiment needs at least one replica");
  ExperimentResult r;
  r.id = id;
  r.parameters = parameters_json(cfg);
  r.statistics = json::object();
  return r;
}

// Median of `key` per n cell must strictly decrease along the n grid.
void check_decreasing_medians(ExperimentResult& res, const std::vector<std::vector<json>>& cells, const char* key,
                              const std::string& label) {
  std::vector<double> medians;
  for (const auto& rows : cells) medians.push_back(median(column(rows, key)));
  res.statistics["trend"][label] = json{{"medians", medians}, {"decreasing", strictly_decreasing(medians)}};
  if (cells.size() >= 2 && !strictly_decreasing(medians)) res.failed_checks.push_back(label + " medians not decreasing");
}

}  // namespace

double gamma_constant() { return std::pow(8.0 / 9.0, 0.25); }

int SigmaRule::operator()(int n) const {
  const double x = static_cast<double>(n);
  int s = 1;
  switch (kind) {
    case Kind::sqrt2n: s = static_cast<int>(std::floor(factor * std::sqrt(2.0 * x))); break;
    case Kind::quarter: s = static_cast<int>(std::floor(std::pow(x, 0.25) + 1e-9)); break;
    case Kind::three_quarter: s = static_cast<int>(std::floor(std::pow(x, 0.75) + 1e-9)); break;
    case Kind::fixed: s = static_cast<int>(factor); break;
  }
  return std::max(1, s);
}

std::string SigmaRule::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::sqrt2n: os << "sqrt:" << factor; break;
    case Kind::quarter: os << "quarter"; break;
    case Kind::three_quarter: os << "three-quarter"; break;
    case Kind::fixed: os << "fixed:" << static_cast<int>(factor); break;
  }
  return os.str();
}

SigmaRule SigmaRule::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const bool has_arg = colon != std::string::npos;
  SigmaRule r;
  if (head == "sqrt") {
    r.kind = Kind::sqrt2n;
    r.factor = has_arg ? std::stod(text.substr(colon + 1)) : 1.0;
    if (!(r.factor > 0)) throw std::invalid_argument("sqrt factor must be positive");
  } else if (head == "quarter" && !has_arg) {
    r.kind = Kind::quarter;
  } else if (head == "three-quarter" && !has_arg) {
    r.kind = Kind::three_quarter;
  } else if (head == "fixed" && has_arg) {
    r.kind = Kind::fixed;
    r.factor = std::stoi(text.substr(colon + 1));
    if (r.factor < 1) throw std::invalid_argument("fixed sigma must be >= 1");
  } else {
    throw std::invalid_argument("unknown sigma rule: " + text);
  }
  return r;
}

double interpolate(const std::vector<int>& seq, double x) {
  if (seq.empty()) throw std::invalid_argument("interpolating an empty sequence");
  const double top = static_cast<double>(seq.size() - 1);
  x = std::clamp(x, 0.0, top);
  const auto i = static_cast<std::size_t>(std::floor(x));
  if (i + 1 >= seq.size()) return seq.back();
  const double f = x - static_cast<double>(i);
  return (1.0 - f) * seq[i] + f * seq[i + 1];
}

RescaledProcesses rescale(const ForestBridge& fb, int grid_points) {
  const ForestShape& shape = fb.forest.shape();
  const int n = shape.edge_count();
  const int sigma = shape.tree_count();
  if (n < 1) throw std::invalid_argument("rescaling needs n >= 1");
  if (grid_points < 2) throw std::invalid_argument("grid needs two or more points");
  const int K = shape.corner_count();
  const ContourPair cp = contour_pair(fb.forest);
  const auto run_min = cp.running_min();
  const std::vector<int> b(fb.bridge.values().begin(), fb.bridge.values().end());
  const double sq = std::sqrt(2.0 * n);
  const double lab = scale_labels(n);

  RescaledProcesses r;
  r.sigma_scaled = sigma / sq;
  for (int k = 0; k < grid_points; ++k) {
    const double s = static_cast<double>(k) / (grid_points - 1);
    r.grid.push_back(s);
    const double x = (K - 1) * s;
    const double c = interpolate(cp.C, x);
    r.C.push_back(c / sq);
    r.L.push_back(interpolate(cp.L, x) / lab);
    const double cmin = std::min(static_cast<double>(run_min[static_cast<std::size_t>(std::floor(x))]), c);
    r.shifted.push_back(r.L.back() + interpolate(b, sigma - cmin) / lab);
    const double t = r.sigma_scaled * s;
    r.bridge_grid.push_back(t);
    r.bridge.push_back(interpolate(b, sq * t) / lab);
    r.C_inf.push_back(interpolate(cp.C, K * s) / sigma);
    r.L_inf.push_back(interpolate(cp.L, K * s) / std::sqrt(static_cast<double>(sigma)));
  }
  return r;
}

std::vector<double> vervaat(const std::vector<double>& path) {
  if (path.empty()) throw std::invalid_argument("vervaat of an empty path");
  const std::size_t m = path.size() - 1;
  if (m == 0) return {0.0};
  std::vector<double> x(path.size());
  for (std::size_t j = 0; j <= m; ++j) x[j] = path[j] - path[0] - (path[m] - path[0]) * static_cast<double>(j) / m;
  const auto k = static_cast<std::size_t>(std::min_element(x.begin(), x.end() - 1) - x.begin());
  std::vector<double> y(path.size());
  for (std::size_t j = 0; j < m; ++j) y[j] = x[(k + j) % m] - x[k];
  y[m] = 0.0;
  return y;
}

std::vector<double> vervaat_reference(const std::vector<double>& path) {
  if (path.empty()) throw std::invalid_argument("vervaat of an empty path");
  const std::size_t m = path.size() - 1;
  if (m == 0) return {0.0};
  std::vector<double> x(path);
  const double drift = path[m] - path[0];
  for (std::size_t j = 0; j <= m; ++j) x[j] = path[j] - path[0] - drift * static_cast<double>(j) / m;
  for (std::size_t r = 0; r < m; ++r) {
    std::vector<double> y;
    for (std::size_t j = 0; j < m; ++j) y.push_back(x[(r + j) % m] - x[r]);
    y.push_back(0.0);
    if (std::all_of(y.begin(), y.end(), [](double v) { return v >= 0.0; })) return y;
  }
  throw std::logic_error("no nonnegative rotation");
}

int bridge_distance(const Bridge& b, int u, int v) {
  const int sigma = b.sigma();
  if (u < 0 || v < 0 || u >= sigma || v >= sigma) throw std::out_of_range("bridge index out of range");
  auto cyc = [&](int i, int j) {
    int m = b[i];
    for (int k = i; k != j; k = (k + 1) % sigma) m = std::min(m, b[(k + 1) % sigma]);
    return m;
  };
  return b[u] + b[v] - 2 * std::max(cyc(u, v), cyc(v, u));
}

double endpoint_probability(int sigma, int k) {
  if (k < 0 || k > sigma) return 0.0;
  auto lc = [](double n, double r) { return std::lgamma(n + 1) - std::lgamma(r + 1) - std::lgamma(n - r + 1); };
  return std::exp(lc(2.0 * sigma - k - 1, sigma - 1.0) - lc(2.0 * sigma, sigma));
}

json ExperimentResult::to_json() const {
  return json{{"id", id},
              {"status", passed() ? "PASSED" : "FAILED"},
              {"failed_checks", failed_checks},
              {"parameters", parameters},
              {"statistics", statistics},
              {"rows", rows},
              {"runtime_seconds", runtime_seconds},
              {"version", version_tag()},
              {"rng", Rng::kIdentifier}};
}

std::string ExperimentResult::to_csv() const {
  std::vector<std::string> keys;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
  std::ostringstream os;
  os.precision(10);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) os << ",";
      if (r.contains(keys[i])) {
        const auto& v = r[keys[i]];
        if (v.is_string()) os << v.get<std::string>();
        else os << v.dump();
      }
    }
    os << "\n";
  }
  // Summary row: column means, replica column marked.
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) os << ",";
    if (keys[i] == "replica") {
      os << "summary";
      continue;
    }
    NeumaierSum s;
    std::size_t count = 0;
    for (const auto& r : rows)
      if (r.contains(keys[i]) && r[keys[i]].is_number()) {
        s.add(r[keys[i]].get<double>());
        ++count;
      }
    if (count) os << s.value() / static_cast<double>(count);
  }
  os << "\n";
  return os.str();
}

ExperimentResult bridge_variance_experiment(const ExperimentConfig& cfg) {
  const Timer timer;
  ExperimentResult res = start_result(cfg, "bridge-variance");
  for (std::size_t g = 0; g < cfg.n.size(); ++g) {
    const int n = cfg.n[g];
    const int sigma = cfg.sigma_rule(n);
    const double lab = scale_labels(n);
    auto rows = run_replicas(cfg.replicas, cfg.threads, [&](int rep) {
      Rng rng(replica_seed(cfg.seed, g, rep));
      const Bridge b = sample_bridge(sigma, rng);
      const std::vector<int> v(b.values().begin(), b.values().end());
      return json{{"n", n},
                  {"sigma", sigma},
                  {"replica", rep},
                  {"midpoint", interpolate(v, sigma / 2.0) / lab},
                  {"start", b[0] / lab},
                  {"endpoint", b.end()},
                  {"endpoint_scaled", b.end() / lab}};
    });
    const Summary mid = summarize(column(rows, "midpoint"));
    const double sigma_scaled = sigma / std::sqrt(2.0 * n);
    const double target = 3.0 * sigma_scaled / 4.0;
    const double rel = std::abs(mid.variance - target) / target;
    json cell{{"n", n}, {"sigma", sigma}, {"sigma_scaled", sigma_scaled}, {"midpoint", summary_json(mid)},
              {"variance_target", target}, {"variance_relative_error", rel},
              {"endpoint_scaled", summary_json(summarize(column(rows, "endpoint_scaled")))}};
    if (rel > 0.10) res.failed_checks.push_back("n=" + std::to_string(n) + ": midpoint variance off by more than 10%");
    const auto ends = column(rows, "endpoint");
    for (int k = 0; k <= 2; ++k) {
      const double p = endpoint_probability(sigma, k);
      const double freq = static_cast<double>(std::count(ends.begin(), ends.end(), -k)) / ends.size();
      const double se = std::sqrt(p * (1 - p) / ends.size());
      const double z = se > 0 ? (freq - p) / se : 0.0;
      cell["endpoint_law"].push_back(json{{"k", k}, {"expected", p}, {"observed", freq}, {"std_error", se}, {"z", z}});
      if (std::abs(z) > 3.0)
        res.failed_checks.push_back("n=" + std::to_string(n) + ": P(b(sigma) = -" + std::to_string(k) +
                                    ") beyond 3 standard errors");
    }
    res.statistics["cells"].push_back(cell);
    res.rows.insert(res.rows.end(), rows.begin(), rows.end());
  }
  res.statistics["tolerance"] = "variance within 10%; endpoint law within 3 standard errors";
  res.runtime_seconds = timer.seconds();
  return res;
}

ExperimentResult dimension_experiment(const ExperimentConfig& cfg) {
  const Timer timer;
  ExperimentResult res = start_result(cfg, "dimension");
  constexpr int kAssertFrom = 100000;
  for (std::size_t g = 0; g < cfg.n.size(); ++g) {
    const int n = cfg.n[g];
    const int sigma = cfg.sigma_rule(n);
    const int r_lo = std::max(1, static_cast<int>(std::ceil(std::pow(n, 0.125))));
    const int r_hi = std::max(r_lo + 1, static_cast<int>(std::floor(std::pow(n, 0.25))));
    std::vector<double> logr;
    for (int r = r_lo; r <= r_hi; ++r) logr.push_back(std::log(static_cast<double>(r)));
    auto rows = run_replicas(cfg.replicas, cfg.threads, [&](int rep) {
      Rng rng(replica_seed(cfg.seed, g, rep));
      const PointedBoundaryMap pm = sample_quadrangulation(n, sigma, rng);
      const Graph graph(pm.map);
      const auto mask = boundary_mask(pm.map);
      const auto bverts = pm.map.boundary_vertices();
      std::vector<NeumaierSum> bulk(logr.size()), bound(logr.size());
      for (int c = 0; c < cfg.centers; ++c) {
        const auto center = static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(graph.vertex_count())));
        const auto prof = ball_volume_profile(graph, center, r_hi);
        const VertexId bc = bverts[ix(static_cast<int>(rng.below(bverts.size())))];
        const auto bprof = boundary_ball_profile(graph, mask, bc, r_hi);
        for (std::size_t k = 0; k < logr.size(); ++k) {
          bulk[k].add(std::log(static_cast<double>(prof[ix(r_lo) + k])));
          bound[k].add(std::log(static_cast<double>(bprof[ix(r_lo) + k])));
        }
      }
      std::vector<double> yb, yd;
      for (std::size_t k = 0; k < logr.size(); ++k) {
        yb.push_back(bulk[k].value() / cfg.centers);
        yd.push_back(bound[k].value() / cfg.centers);
      }
      return json{{"n", n},
                  {"sigma", sigma},
                  {"replica", rep},
                  {"vertices", graph.vertex_count()},
                  {"boundary_vertices", bverts.size()},
                  {"bulk_slope", fit_line(logr, yb).slope},
                  {"boundary_slope", fit_line(logr, yd).slope}};
    });
    const Summary bulk = summarize(column(rows, "bulk_slope"));
    const Summary bnd = summarize(column(rows, "boundary_slope"));
    const bool asserted = n >= kAssertFrom;
    res.statistics["cells"].push_back(json{{"n", n},
                                           {"sigma", sigma},
                                           {"r_min", r_lo},
                                           {"r_max", r_hi},
                                           {"bulk_slope", summary_json(bulk)},
                                           {"boundary_slope", summary_json(bnd)},
                                           {"asserted", asserted}});
    if (asserted) {
      if (bulk.mean < 3.4 || bulk.mean > 4.6)
        res.failed_checks.push_back("n=" + std::to_string(n) + ": bulk slope outside [3.4, 4.6]");
      if (bnd.mean < 1.5 || bnd.mean > 2.5)
        res.failed_checks.push_back("n=" + std::to_string(n) + ": boundary slope outside [1.5, 2.5]");
    }
    res.rows.insert(res.rows.end(), rows.begin(), rows.end());
  }
  res.statistics["tolerance"] = "mean slopes in [3.4, 4.6] (bulk) and [1.5, 2.5] (boundary), asserted for n >= 1e5";
  res.runtime_seconds = timer.seconds();
  return res;
}

ExperimentResult sigma_zero_experiment(const ExperimentConfig& cfg) {
  const Timer timer;
  ExperimentResult res = start_result(cfg, "sigma-zero");
  std::vector<std::vector<json>> cells;
  for (std::size_t g = 0; g < cfg.n.size(); ++g) {
    const int n = cfg.n[g];
    const int sigma = cfg.sigma_rule(n);
    auto rows = run_replicas(cfg.replicas, cfg.threads, [&](int rep) {
      Rng rng(replica_seed(cfg.seed, g, rep));
      const ForestBridge fb = sample_encoding(n, sigma, rng);
      const int t = largest_tree_index(fb.forest.shape());
      const int edges = fb.forest.shape().tree_size(t) - 1;
      const int span = outside_label_span(fb, t);
      const double mass = n > 0 ? static_cast<double>(edges) / n : 1.0;
      return json{{"n", n},
                  {"sigma", sigma},
                  {"replica", rep},
                  {"largest_tree_edges", edges},
                  {"tree_mass", mass},
                  {"missing_mass", 1.0 - mass},
                  {"label_span", span},
                  {"scaled_bound", 2.0 * (span + 1) / scale_labels(n)}};
    });
    res.statistics["cells"].push_back(json{{"n", n},
                                           {"sigma", sigma},
                                           {"scaled_bound", summary_json(summarize(column(rows, "scaled_bound")))},
                                           {"tree_mass", summary_json(summarize(column(rows, "tree_mass")))}});
    res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    cells.push_back(std::move(rows));
  }
  check_decreasing_medians(res, cells, "scaled_bound", "scaled_bound");
  check_decreasing_medians(res, cells, "missing_mass", "missing_mass");
  res.runtime_seconds = timer.seconds();
  return res;
}

ExperimentResult sigma_infinity_experiment(const ExperimentConfig& cfg) {
  const Timer timer;
  ExperimentResult res = start_result(cfg, "sigma-infinity");
  constexpr int kAssertGapFrom = 100000;
  std::vector<std::vector<json>> cells;
  for (std::size_t g = 0; g < cfg.n.size(); ++g) {
    const int n = cfg.n[g];
    const int sigma = cfg.sigma_rule(n);
    auto rows = run_replicas(cfg.replicas, cfg.threads, [&](int rep) {
      Rng rng(replica_seed(cfg.seed, g, rep));
      const ForestBridge fb = sample_encoding(n, sigma, rng);
      const ContourPair cp = contour_pair(fb.forest);
      const int K = fb.forest.shape().corner_count();
      double sup_c = 0.0;
      for (int i = 0; i <= K; ++i)
        sup_c = std::max(sup_c, std::abs(static_cast<double>(cp.C[ix(i)]) / sigma - (1.0 - static_cast<double>(i) / K)));
      const auto [lo, hi] = std::minmax_element(fb.forest.labels().begin(), fb.forest.labels().end());
      const double norm = std::sqrt(2.0 * sigma);

      // Distortion of the correspondence pairing a vertex with its tree index.
      const PointedBoundaryMap pm = bdg_forward(fb.forest, fb.bridge);
      const Graph graph(pm.map);
      const auto facial = facial_sequence(fb.forest.shape());
      const auto run_min = cp.running_min();
      const RangeMin floor(std::vector<int>(fb.bridge.values().begin(), fb.bridge.values().end() - 1));
      auto delta = [&](int u, int v) {
        return floor.at(u) + floor.at(v) - 2 * std::max(floor.cyclic_min(u, v), floor.cyclic_min(v, u));
      };
      double dis = 0.0;
      std::vector<int> dist;
      for (int s = 0; s < cfg.sources; ++s) {
        const auto i = static_cast<int>(rng.below(static_cast<std::uint64_t>(K)));
        graph.bfs(facial[ix(i)], dist);
        for (int t = 0; t < cfg.targets; ++t) {
          const auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(K)));
          const int d = dist[ix(facial[ix(j)])];
          const int dd = delta(sigma - run_min[ix(i)], sigma - run_min[ix(j)]);
          dis = std::max(dis, std::abs(d - dd) / norm);
        }
      }
      return json{{"n", n},
                  {"sigma", sigma},
                  {"replica", rep},
                  {"sup_contour_gap", sup_c},
                  {"label_ratio", (*hi - *lo) / norm},
                  {"distortion", dis}};
    });
    const Summary gap = summarize(column(rows, "sup_contour_gap"));
    const Summary dis = summarize(column(rows, "distortion"));
    res.statistics["cells"].push_back(json{{"n", n},
                                           {"sigma", sigma},
                                           {"sup_contour_gap", summary_json(gap)},
                                           {"label_ratio", summary_json(summarize(column(rows, "label_ratio")))},
                                           {"distortion", summary_json(dis)}});
    if (n >= kAssertGapFrom && gap.mean >= 0.1) res.failed_checks.push_back("n=" + std::to_string(n) + ": mean contour gap >= 0.1");
    if (n >= (1 << 18) && dis.median >= 0.5)
      res.failed_checks.push_back("n=" + std::to_string(n) + ": median distortion >= 0.5");
    res.rows.insert(res.rows.end(), rows.begin(), rows.end());
    cells.push_back(std::move(rows));
  }
  check_decreasing_medians(res, cells, "label_ratio", "label_ratio");
  res.statistics["tolerance"] = "mean contour gap < 0.1 for n >= 1e5; median distortion < 0.5 for n >= 2^18; decreasing label-ratio medians";
  res.runtime_seconds = timer.seconds();
  return res;
}

ExperimentResult excursion_experiment(const ExperimentConfig& cfg) {
  const Timer timer;
  ExperimentResult res = start_result(cfg, "excursion");
  for (std::size_t g = 0; g < cfg.n.size(); ++g) {
    const int n = cfg.n[g];
    const int sigma = cfg.sigma_rule(n);
    auto rows = run_replicas(cfg.replicas, cfg.threads, [&](int rep) {
      Rng rng(replica_seed(cfg.seed, g, rep));
      const Bridge b = sample_bridge(sigma, rng);
      std::vector<double> path;
      for (int v : b.values()) path.push_back(v / std::sqrt(2.0 * sigma));
      const auto y = vervaat(path);
      const double x = sigma / 2.0;
      const auto k = static_cast<std::size_t>(x);
      const double mid = k + 1 < y.size() ? y[k] + (x - k) * (y[k + 1] - y[k]) : y[k];
      // Reference draw: excursion at 1/2 is half the norm of a 3d Gaussian.
      Rng ref(Seed{cfg.seed, (std::uint64_t{1} << 62) | (static_cast<std::uint64_t>(g) << 32) |
                                 static_cast<std::uint32_t>(rep)});
      const double z1 = ref.normal(), z2 = ref.normal(), z3 = ref.normal();
      return json{{"n", n},
                  {"sigma", sigma},
                  {"replica", rep},
                  {"midpoint", mid},
                  {"reference", std::sqrt(z1 * z1 + z2 * z2 + z3 * z3) / 2.0}};
    });
    const Summary mid = summarize(column(rows, "midpoint"));
    const Summary ref = summarize(column(rows, "reference"));
    const double rel = std::abs(mid.mean - ref.mean) / ref.mean;
    res.statistics["cells"].push_back(json{{"n", n},
                                           {"sigma", sigma},
                                           {"midpoint", summary_json(mid)},
                                           {"reference", summary_json(ref)},
                                           {"relative_error", rel}});
    if (rel > 0.10) res.failed_checks.push_back("n=" + std::to_string(n) + ": excursion midpoint mean off by more than 10%");
    res.rows.insert(res.rows.end(), rows.begin(), rows.end());
  }
  res.runtime_seconds = timer.seconds();
  return res;
}

std::vector<std::string> experiment_names() {
  return {"bridge-variance", "dimension", "sigma-zero", "sigma-infinity", "excursion"};
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.name == "bridge-variance") return bridge_variance_experiment(cfg);
  if (cfg.name == "dimension") return dimension_experiment(cfg);
  if (cfg.name == "sigma-zero") return sigma_zero_experiment(cfg);
  if (cfg.name == "sigma-infinity") return sigma_infinity_experiment(cfg);
  if (cfg.name == "excursion") return excursion_experiment(cfg);
  throw std::invalid_argument("unknown experiment: " + cfg.name);
}

}  // namespace qbmap

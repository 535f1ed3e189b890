#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qbmap/bdg.hpp"

namespace qbmap {

/// Label scaling constant (8/9)^(1/4).
double gamma_constant();

/// Rule giving the boundary half-length sigma_n as a function of n.
struct SigmaRule {
  enum class Kind { sqrt2n, quarter, three_quarter, fixed } kind = Kind::sqrt2n;
  double factor = 1.0;

  int operator()(int n) const;
  std::string describe() const;
  /// "sqrt[:f]" (floor(f*sqrt(2n))), "quarter" (floor(n^(1/4))),
  /// "three-quarter" (floor(n^(3/4))) or "fixed:k".
  static SigmaRule parse(const std::string& text);
};

struct RescaledProcesses {
  std::vector<double> grid;        // s values in [0, 1]
  std::vector<double> C;           // C((K-1)s) / sqrt(2n)
  std::vector<double> L;           // L((K-1)s) / (gamma n^(1/4))
  std::vector<double> shifted;     // L_(n)(s) + b_(n)(sigma_(n) - min C_(n) on [0, s])
  double sigma_scaled = 0.0;       // sigma / sqrt(2n)
  std::vector<double> bridge_grid; // times in [0, sigma_scaled]
  std::vector<double> bridge;      // b(sqrt(2n) t) / (gamma n^(1/4))
  std::vector<double> C_inf;       // C(K s) / sigma
  std::vector<double> L_inf;       // L(K s) / sqrt(sigma)
};

RescaledProcesses rescale(const ForestBridge& fb, int grid_points = 1024);

/// Linear interpolation of an integer sequence at a real index.
double interpolate(const std::vector<int>& seq, double x);

/// Cyclic shift at the first minimum of a recentered bridge path (endpoint
/// drift removed), rebased to start at 0. Output has the input length and
/// ends with 0.
std::vector<double> vervaat(const std::vector<double>& path);
/// Brute force over every rotation; same convention as `vervaat`.
std::vector<double> vervaat_reference(const std::vector<double>& path);

/// Bridge pseudo-distance b(u) + b(v) - 2 max(cyclic minima) on indices
/// 0..sigma-1.
int bridge_distance(const Bridge& b, int u, int v);

/// P(b(sigma) = -k) for a uniform bridge of length sigma.
double endpoint_probability(int sigma, int k);

struct ExperimentConfig {
  std::string name;
  std::vector<int> n;
  SigmaRule sigma_rule;
  int replicas = 100;
  std::uint64_t seed = 1;
  int threads = 1;
  int grid_points = 1024;
  int centers = 10;       // BFS centers per map
  int sources = 20;       // BFS sources per map for sampled pair statistics
  int targets = 100;      // targets per source
};

struct ExperimentResult {
  std::string id;
  nlohmann::json parameters;
  nlohmann::json statistics;
  std::vector<nlohmann::json> rows;  // one per replica
  std::vector<std::string> failed_checks;
  double runtime_seconds = 0.0;

  bool passed() const { return failed_checks.empty(); }
  nlohmann::json to_json() const;
  /// Header plus one row per replica and a final summary row.
  std::string to_csv() const;
};

ExperimentResult bridge_variance_experiment(const ExperimentConfig& cfg);
ExperimentResult dimension_experiment(const ExperimentConfig& cfg);
ExperimentResult sigma_zero_experiment(const ExperimentConfig& cfg);
ExperimentResult sigma_infinity_experiment(const ExperimentConfig& cfg);
ExperimentResult excursion_experiment(const ExperimentConfig& cfg);

/// Dispatch by name: bridge-variance, dimension, sigma-zero, sigma-infinity,
/// excursion.
ExperimentResult run_experiment(const ExperimentConfig& cfg);
std::vector<std::string> experiment_names();

}  // namespace qbmap

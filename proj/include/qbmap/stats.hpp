#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qbmap {

/// Compensated (Neumaier) running sum.
class NeumaierSum {
 public:
  void add(double x);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Summary {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double std_error = 0.0;
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
};

Summary summarize(std::span<const double> xs);
/// Linear-interpolated quantile, p in [0, 1].
double quantile(std::vector<double> xs, double p);
double median(std::span<const double> xs);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_std_error = 0.0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// True when every element is strictly below the previous one.
bool strictly_decreasing(std::span<const double> xs);

}  // namespace qbmap

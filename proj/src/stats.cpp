#include "qbmap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbmap {

void NeumaierSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
  else comp_ += (x - t) + sum_;
  sum_ = t;
}

double quantile(std::vector<double> xs, double p) {
  if (xs.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(xs.begin(), xs.end());
  const double pos = p * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, xs.size() - 1);
  return xs[lo] + (pos - static_cast<double>(lo)) * (xs[hi] - xs[lo]);
}

double median(std::span<const double> xs) { return quantile(std::vector<double>(xs.begin(), xs.end()), 0.5); }

Summary summarize(std::span<const double> xs) {
  Summary s;
  s.count = static_cast<std::int64_t>(xs.size());
  if (xs.empty()) return s;
  NeumaierSum sum;
  for (double x : xs) sum.add(x);
  s.mean = sum.value() / static_cast<double>(xs.size());
  NeumaierSum sq;
  for (double x : xs) sq.add((x - s.mean) * (x - s.mean));
  if (xs.size() > 1) s.variance = sq.value() / static_cast<double>(xs.size() - 1);
  s.std_error = std::sqrt(s.variance / static_cast<double>(xs.size()));
  std::vector<double> v(xs.begin(), xs.end());
  s.min = *std::min_element(v.begin(), v.end());
  s.max = *std::max_element(v.begin(), v.end());
  s.q25 = quantile(v, 0.25);
  s.median = quantile(v, 0.5);
  s.q75 = quantile(v, 0.75);
  return s;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit needs two or more points");
  const auto n = static_cast<double>(x.size());
  NeumaierSum sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / n, my = sy.value() / n;
  NeumaierSum sxx, sxy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx.add((x[i] - mx) * (x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
  }
  LinearFit f;
  f.slope = sxy.value() / sxx.value();
  f.intercept = my - f.slope * mx;
  if (x.size() > 2) {
    NeumaierSum rss;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - f.intercept - f.slope * x[i];
      rss.add(r * r);
    }
    f.slope_std_error = std::sqrt(rss.value() / (n - 2) / sxx.value());
  }
  return f;
}

bool strictly_decreasing(std::span<const double> xs) {
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (!(xs[i] < xs[i - 1])) return false;
  return true;
}

}  // namespace qbmap

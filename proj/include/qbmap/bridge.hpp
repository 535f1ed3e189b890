#pragma once

#include <span>
#include <vector>

namespace qbmap {

/// Integer walk b(0..sigma) with b(0) = 0, steps >= -1 and b(sigma) <= 0.
class Bridge {
 public:
  explicit Bridge(std::vector<int> values);
  /// The all-zero bridge of length `sigma`.
  static Bridge zero(int sigma);

  int sigma() const { return static_cast<int>(values_.size()) - 1; }
  int operator[](int k) const { return values_[static_cast<std::size_t>(k)]; }
  int end() const { return values_.back(); }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const Bridge&, const Bridge&) = default;

 private:
  std::vector<int> values_;
};

/// Sequence of length 2*sigma over {-1, +1} with exactly sigma entries -1.
std::vector<int> bridge_to_pm1(const Bridge& b);
Bridge pm1_to_bridge(std::span<const int> pm1);

}  // namespace qbmap

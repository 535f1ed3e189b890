#include "qbmap/bridge.hpp"

#include <stdexcept>

namespace qbmap {

Bridge::Bridge(std::vector<int> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw std::invalid_argument("bridge needs sigma >= 1");
  if (values_.front() != 0) throw std::invalid_argument("bridge must start at 0");
  if (values_.back() > 0) throw std::invalid_argument("bridge must end at a nonpositive value");
  for (std::size_t k = 1; k < values_.size(); ++k)
    if (values_[k] - values_[k - 1] < -1) throw std::invalid_argument("bridge step below -1");
}

Bridge Bridge::zero(int sigma) {
  if (sigma < 1) throw std::invalid_argument("bridge needs sigma >= 1");
  return Bridge(std::vector<int>(static_cast<std::size_t>(sigma) + 1, 0));
}

std::vector<int> bridge_to_pm1(const Bridge& b) {
  const int sigma = b.sigma();
  std::vector<int> out;
  out.reserve(2 * static_cast<std::size_t>(sigma));
  out.insert(out.end(), static_cast<std::size_t>(-b.end()), +1);
  for (int k = 1; k <= sigma; ++k) {
    out.push_back(-1);
    out.insert(out.end(), static_cast<std::size_t>(b[k] - b[k - 1] + 1), +1);
  }
  return out;
}

Bridge pm1_to_bridge(std::span<const int> pm1) {
  if (pm1.size() % 2 != 0 || pm1.empty()) throw std::invalid_argument("pm1 sequence must have even positive length");
  const auto sigma = pm1.size() / 2;
  std::size_t minus = 0;
  for (int x : pm1) {
    if (x == -1) ++minus;
    else if (x != 1) throw std::invalid_argument("pm1 entries must be -1 or +1");
  }
  if (minus != sigma) throw std::invalid_argument("pm1 sequence must contain exactly sigma entries -1");

  std::size_t i = 0;
  int lead = 0;
  while (pm1[i] == 1) {
    ++lead;
    ++i;
  }
  // Each -1 closes the previous block; the +1 run after it is the step plus one.
  std::vector<int> values(sigma + 1, 0);
  for (std::size_t k = 1; k <= sigma; ++k) {
    ++i;  // the -1
    int run = 0;
    while (i < pm1.size() && pm1[i] == 1) {
      ++run;
      ++i;
    }
    values[k] = values[k - 1] + run - 1;
  }
  // The final block is shortened by exactly the leading run.
  if (values[sigma] != -lead) throw std::logic_error("pm1 decoding inconsistency");
  return Bridge(std::move(values));
}

}  // namespace qbmap

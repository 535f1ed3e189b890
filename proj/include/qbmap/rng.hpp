#pragma once

#include <cstdint>
#include <random>

namespace qbmap {

/// Master seed plus a stream index; distinct streams give independent draws.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

/// mt19937_64 seeded through std::seed_seq. Bounded integers and doubles are
/// derived here rather than through <random> distributions so that output is
/// identical across standard libraries.
class Rng {
 public:
  static constexpr const char* kIdentifier = "mt19937_64/seed_seq";

  explicit Rng(Seed seed);

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qbmap

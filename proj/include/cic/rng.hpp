#pragma once

#include <cstdint>
#include <random>

namespace cic {

/// Deterministic uniform generator on top of mt19937_64. Doubles are drawn
/// from the raw 53-bit mantissa path rather than std::uniform_real_distribution,
/// so streams are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  int sign() { return (eng_() & 1u) ? 1 : -1; }
  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cic

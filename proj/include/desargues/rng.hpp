#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "desargues/matrix.hpp"

namespace desargues {

/// Reproducible random source for generators and property tests.
///
/// The engine is std::mt19937_64 (fully specified by the C++ standard) seeded
/// with the 64-bit seed directly. Bounded integers are drawn by rejection on
/// raw 64-bit outputs, so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// Uniform double in [0, 1) built from the top 53 bits of one output.
  double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Gaussian integer with both components uniform in [-bound, bound].
  GaussianRational gaussian_integer(std::int64_t bound) {
    const std::int64_t re = uniform_int(-bound, bound);
    const std::int64_t im = uniform_int(-bound, bound);
    return {Rational(static_cast<long>(re)), Rational(static_cast<long>(im))};
  }

  /// Vector of `len` Gaussian integers, resampled until nonzero.
  ExactVector nonzero_gaussian_vector(std::size_t len, std::int64_t bound) {
    for (;;) {
      ExactVector v(len);
      bool nonzero = false;
      for (auto& z : v) {
        z = gaussian_integer(bound);
        nonzero = nonzero || !z.is_zero();
      }
      if (nonzero) return v;
    }
  }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace desargues

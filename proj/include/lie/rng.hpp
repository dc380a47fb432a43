#pragma once

#include <cstdint>
#include <random>

#include "lie/rational.hpp"

namespace lie {

/// Deterministic source of small integers and rationals. Uses the
/// fully-specified mt19937_64 sequence with explicit range mapping, so
/// identical seeds give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Numerator in [-num_bound, num_bound], denominator in [1, den_bound].
  Rational rational(long num_bound, long den_bound) {
    return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lie

#pragma once

#include <cstdint>
#include <random>

#include "homakivis/linear.hpp"

namespace homakivis {

/// Seeded integer stream. std::mt19937_64 is specified bit-for-bit by the
/// standard; the reductions below use integer arithmetic only, so a seed
/// reproduces the same draws on every platform. (Standard distributions
/// are implementation-defined and therefore avoided.)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [0, n); n > 0. Modulo reduction, bias < n / 2^64.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Numerator in [-bound, bound], denominator in {1, 2, 3}.
  Scalar rational(std::int64_t bound);
  Vector vector(std::size_t dim, std::int64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Sample coordinates for randomized identity checks: numerators in
/// [-9, 9], denominators in {1, 2, 3}.
inline constexpr std::int64_t kSampleBound = 9;
inline constexpr std::uint64_t kDefaultSampleSeed = 20100226;

}  // namespace homakivis

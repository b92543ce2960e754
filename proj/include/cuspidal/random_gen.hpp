#pragma once

#include <cstdint>

#include "cuspidal/configuration.hpp"

namespace cusp {

/// The fixed instance generator, part of the external contract so that
/// alternate implementations reproduce identical instance sets.
///
/// 64-bit state s; each draw performs
///   s += 0x9E3779B97F4A7C15
///   z = s; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// (splitmix64). Bounded draws reduce modulo the range size.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] via modulo reduction (the documented
  /// contract; the slight bias is irrelevant for instance generation).
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

struct RandomConfigSpec {
  Index n = 2;
  Index N = 5;
  long coordinate_bound = 3;
  std::uint64_t seed = 1;
  std::size_t count = 1;
};

/// Deterministic stream of full-rank normalized configurations. Entries
/// are drawn column-major (point 0 coordinates first), each uniform in
/// [-bound, bound]; rank-deficient draws are rejected and redrawn.
class ConfigStream {
 public:
  explicit ConfigStream(const RandomConfigSpec& spec);

  /// Next configuration. Throws DomainError after 10^4 consecutive
  /// rejections (e.g. bound 0 and N > n+1).
  PointConfiguration next();

  SplitMix64& rng() { return rng_; }

 private:
  RandomConfigSpec spec_;
  SplitMix64 rng_;
};

/// Random rational with numerator in [-bound, bound] and denominator in
/// [1, den_bound].
Rational random_rational(SplitMix64& rng, long bound, long den_bound = 1);

/// Random size x size integer matrix with entries in [-bound, bound],
/// redrawn until invertible.
Mat random_invertible(SplitMix64& rng, Index size, long bound);

/// Random integer matrix of the given shape with entries in [-bound, bound].
Mat random_int_matrix(SplitMix64& rng, Index rows, Index cols, long bound);

}  // namespace cusp

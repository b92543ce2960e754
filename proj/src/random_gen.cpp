#include "cuspidal/random_gen.hpp"

#include "cuspidal/errors.hpp"

namespace cusp {

namespace {

constexpr int kMaxRejections = 10000;

}  // namespace

ConfigStream::ConfigStream(const RandomConfigSpec& spec) : spec_(spec), rng_(spec.seed) {
  if (spec.N < spec.n + 1)
    throw std::invalid_argument("RandomConfigSpec: N must be at least n+1");
}

PointConfiguration ConfigStream::next() {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Mat coords(spec_.n, spec_.N);
    for (Index j = 0; j < spec_.N; ++j)  // column-major draw order, documented
      for (Index i = 0; i < spec_.n; ++i)
        coords(i, j) = Rational(rng_.range(-spec_.coordinate_bound, spec_.coordinate_bound));
    Mat m(spec_.n + 1, spec_.N);
    m.row(0).setConstant(Rational(1));
    m.bottomRows(spec_.n) = coords;
    if (rank(m) == spec_.n + 1) return validate_normalize(m, false);
  }
  throw DomainError("ConfigStream: 10^4 consecutive rank-deficient draws");
}

Rational random_rational(SplitMix64& rng, long bound, long den_bound) {
  const long num = rng.range(-bound, bound);
  const long den = den_bound <= 1 ? 1 : rng.range(1, den_bound);
  return Rational(num, den);
}

Mat random_int_matrix(SplitMix64& rng, Index rows, Index cols, long bound) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Rational(rng.range(-bound, bound));
  return m;
}

Mat random_invertible(SplitMix64& rng, Index size, long bound) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Mat m = random_int_matrix(rng, size, size, bound);
    if (!det(m).is_zero()) return m;
  }
  throw DomainError("random_invertible: 10^4 consecutive singular draws");
}

}  // namespace cusp

#include "cuspidal/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cusp {

namespace {

// Row-major integer copy of m with each row scaled by the lcm of its
// denominators. Returns the per-row scale factors.
std::vector<mpz_class> clear_denominators(const Mat& m, std::vector<std::vector<mpz_class>>& z) {
  const Index rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> scales(static_cast<std::size_t>(rows), 1);
  z.assign(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(cols)));
  for (Index i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
    scales[static_cast<std::size_t>(i)] = l;
    for (Index j = 0; j < cols; ++j) {
      const Rational& r = m(i, j);
      z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r.num() * (l / r.den());
    }
  }
  return scales;
}

}  // namespace

Rational det(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square matrix");
  const Index k = m.rows();
  if (k == 0) return Rational(1);

  std::vector<std::vector<mpz_class>> z;
  const std::vector<mpz_class> scales = clear_denominators(m, z);

  // Bareiss fraction-free elimination; every division below is exact.
  int sign = 1;
  mpz_class prev = 1;
  for (Index step = 0; step + 1 < k; ++step) {
    const auto s = static_cast<std::size_t>(step);
    std::size_t pivot = s;
    while (pivot < static_cast<std::size_t>(k) && z[pivot][s] == 0) ++pivot;
    if (pivot == static_cast<std::size_t>(k)) return Rational(0);
    if (pivot != s) {
      std::swap(z[pivot], z[s]);
      sign = -sign;
    }
    for (std::size_t i = s + 1; i < static_cast<std::size_t>(k); ++i) {
      for (std::size_t j = s + 1; j < static_cast<std::size_t>(k); ++j) {
        mpz_class t = z[s][s] * z[i][j] - z[i][s] * z[s][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][s] = 0;
    }
    prev = z[s][s];
  }

  mpz_class num = z[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(k - 1)];
  if (sign < 0) num = -num;
  mpz_class den = 1;
  for (const mpz_class& s : scales) den *= s;
  return Rational(num, den);
}

Index rank(const Mat& m) {
  const Index rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<mpz_class>> z;
  clear_denominators(m, z);

  Index r = 0;
  mpz_class prev = 1;
  for (Index col = 0; col < cols && r < rows; ++col) {
    const auto c = static_cast<std::size_t>(col);
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < static_cast<std::size_t>(rows) && z[pivot][c] == 0) ++pivot;
    if (pivot == static_cast<std::size_t>(rows)) continue;
    std::swap(z[pivot], z[static_cast<std::size_t>(r)]);
    const auto rr = static_cast<std::size_t>(r);
    for (std::size_t i = rr + 1; i < static_cast<std::size_t>(rows); ++i) {
      for (std::size_t j = c + 1; j < static_cast<std::size_t>(cols); ++j) {
        mpz_class t = z[rr][c] * z[i][j] - z[i][c] * z[rr][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[rr][c];
    ++r;
  }
  return r;
}

Mat rref(Mat m, std::vector<Index>* pivots) {
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index col = 0; col < cols && r < rows; ++col) {
    Index pivot = r;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Rational inv = Rational(1) / m(r, col);
    for (Index j = col; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (Index j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return m;
}

Mat kernel_basis(const Mat& m) {
  const Index cols = m.cols();
  std::vector<Index> pivots;
  const Mat r = rref(m, &pivots);

  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index j = 0; j < cols; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);

  Mat k = Mat::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    const Index f = free_cols[fi];
    k(f, static_cast<Index>(fi)) = Rational(1);
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      k(pivots[pi], static_cast<Index>(fi)) = -r(static_cast<Index>(pi), f);
  }
  return k;
}

std::optional<Vec> solve_particular(const Mat& a, const Vec& b) {
  const Index rows = a.rows(), cols = a.cols();
  Mat aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<Index> pivots;
  const Mat r = rref(std::move(aug), &pivots);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // inconsistent

  Vec x = Vec::Zero(cols);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x(pivots[pi]) = r(static_cast<Index>(pi), cols);
  return x;
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square matrix");
  const Index k = m.rows();
  Mat aug(k, 2 * k);
  aug.leftCols(k) = m;
  aug.rightCols(k) = Mat::Identity(k, k);
  std::vector<Index> pivots;
  const Mat r = rref(std::move(aug), &pivots);
  if (static_cast<Index>(pivots.size()) != k || (k > 0 && pivots.back() != k - 1))
    throw std::invalid_argument("inverse: singular matrix");
  return r.rightCols(k);
}

SignatureTriple signature_symmetric(const Mat& q) {
  if (q.rows() != q.cols()) throw std::invalid_argument("signature_symmetric: non-square matrix");
  for (Index i = 0; i < q.rows(); ++i)
    for (Index j = i + 1; j < q.cols(); ++j)
      if (q(i, j) != q(j, i))
        throw std::invalid_argument("signature_symmetric: non-symmetric matrix");

  Mat w = q;
  const Index d = w.rows();
  SignatureTriple sig;

  for (Index i = 0; i < d; ++i) {
    if (w(i, i).is_zero()) {
      // Prefer a later nonzero diagonal entry; swap it into position.
      Index dj = -1;
      for (Index j = i + 1; j < d; ++j)
        if (!w(j, j).is_zero()) { dj = j; break; }
      if (dj >= 0) {
        w.row(i).swap(w.row(dj));
        w.col(i).swap(w.col(dj));
      } else {
        // All remaining diagonal entries vanish; expose one from an
        // off-diagonal entry via the congruence row_j += row_k.
        Index oj = -1, ok = -1;
        for (Index j = i; j < d && oj < 0; ++j)
          for (Index k = j + 1; k < d; ++k)
            if (!w(j, k).is_zero()) { oj = j; ok = k; break; }
        if (oj < 0) {
          sig.zeros += d - i;
          return sig;
        }
        w.row(oj) += w.row(ok);
        w.col(oj) += w.col(ok);
        if (oj != i) {
          w.row(i).swap(w.row(oj));
          w.col(i).swap(w.col(oj));
        }
      }
    }
    const Rational pivot = w(i, i);
    if (pivot.sign() > 0) ++sig.positives; else ++sig.negatives;
    for (Index r = i + 1; r < d; ++r) {
      if (w(r, i).is_zero()) continue;
      const Rational f = w(r, i) / pivot;
      w.row(r) -= f * w.row(i);
      w.col(r) -= f * w.col(i);
    }
  }
  return sig;
}

}  // namespace cusp

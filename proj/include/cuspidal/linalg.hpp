#pragma once

#include <optional>
#include <vector>

#include "cuspidal/rational.hpp"

namespace cusp {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Inertia (n+, n-; n0) of a real symmetric matrix.
struct SignatureTriple {
  Index positives = 0;
  Index negatives = 0;
  Index zeros = 0;

  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Throws std::invalid_argument on
/// non-square input. det of the empty 0x0 matrix is 1.
Rational det(const Mat& m);

/// Exact rank via fraction-free row reduction.
Index rank(const Mat& m);

/// Reduced row echelon form. Pivot column indices are appended to
/// `pivots` when non-null.
Mat rref(Mat m, std::vector<Index>* pivots = nullptr);

/// Canonical kernel basis: cols x (cols - rank) matrix K with m*K = 0,
/// carrying the identity pattern in the free-column positions of the RREF
/// (leftmost pivots chosen greedily).
Mat kernel_basis(const Mat& m);

/// Canonical particular solution of a*x = b (free variables set to zero),
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve_particular(const Mat& a, const Vec& b);

/// Exact inverse; throws std::invalid_argument when singular or non-square.
Mat inverse(const Mat& m);

/// Signature of the quadratic form t^T q t by exact congruence
/// diagonalization with symmetric pivoting. When every remaining diagonal
/// entry is zero but some off-diagonal q_ij is not, row/column j is added
/// to row/column i to expose a nonzero pivot. Throws std::invalid_argument
/// on non-symmetric input.
SignatureTriple signature_symmetric(const Mat& q);

/// Visits all k-subsets of {0,...,n-1} in lexicographic order.
/// The callback receives the sorted index vector.
template <typename Fn>
void for_each_subset(Index n, Index k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(const_cast<const std::vector<Index>&>(idx));
    if (k == 0) return;
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace cusp

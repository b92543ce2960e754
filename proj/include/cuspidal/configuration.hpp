#pragma once

#include "cuspidal/linalg.hpp"

namespace cusp {

/// A finite point configuration: the spectrum A as a (1+n) x N rational
/// matrix whose top row is the all-ones vector. Immutable after
/// construction through validate_normalize.
struct PointConfiguration {
  Index n = 0;  ///< dimension
  Index N = 0;  ///< point count
  Index m = 0;  ///< codimension N - n - 1
  Mat matrix;   ///< (1+n) x N, ones top row
  Mat transform;  ///< row operation U with matrix = U * raw (I when homogenized)
  bool homogenized = false;

  /// The coordinate block: matrix with the ones row deleted (n x N).
  Mat coords() const { return matrix.bottomRows(n); }

  /// Coordinates of point j as an n-vector.
  Vec point(Index j) const { return matrix.col(j).tail(n); }
};

/// An N x m matrix B with A*B = 0 and rank m; rows are the beta_k.
struct GaleDual {
  Mat matrix;

  Index points() const { return matrix.rows(); }
  Index codim() const { return matrix.cols(); }
  RowVec row(Index k) const { return matrix.row(k); }
};

/// Validates and normalizes a raw matrix into a configuration.
///
/// With homogenize set, an all-ones top row is prepended. Otherwise the
/// all-ones vector must lie in the row span; the recorded invertible row
/// operation U places the solving functional xi first and completes with
/// original rows chosen greedily. Throws NotPseudoHomogeneous or
/// RankDeficient.
PointConfiguration validate_normalize(const Mat& raw, bool homogenize);

/// Builds a configuration from an already-normalized matrix (ones top row,
/// full rank); rejects anything else. Used for column subsets.
PointConfiguration subconfiguration(const PointConfiguration& a,
                                    const std::vector<Index>& columns);

/// Canonical Gale dual: kernel_basis of the configuration matrix.
GaleDual gale_dual(const PointConfiguration& a);

/// Gale dual adapted to point alpha: the last column has entry 1 at row
/// alpha and every other column has entry 0 there; the first m-1 columns
/// restricted to the remaining rows form a Gale dual of A minus alpha.
/// Throws DeletionDropsRank when deleting alpha lowers the rank.
GaleDual adapted_gale_dual(const PointConfiguration& a, Index alpha);

/// True iff some row of the canonical Gale dual vanishes. Basis-independent.
bool is_pyramid(const PointConfiguration& a);

/// Codimension one and not a pyramid.
bool is_circuit(const PointConfiguration& a);

/// The constant C(B) with |A_sigma| = C(B) sgn(sigma) |B_sigma| over all
/// (1+n)-subsets sigma, where sgn(sigma) is the product of (-1)^k over the
/// 1-based members of sigma. Verifies the identity exhaustively and throws
/// ConsistencyFailure on any violation.
Rational minor_duality_constant(const PointConfiguration& a, const GaleDual& b);

}  // namespace cusp

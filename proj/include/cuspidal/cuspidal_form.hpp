#pragma once

#include "cuspidal/configuration.hpp"
#include "cuspidal/polynomial.hpp"

namespace cusp {

/// The cuspidal form P_A(t) = sum over n-subsets sigma of |A^_sigma|^2
/// prod_{k in sigma} <beta_k, t>. Subsets are enumerated lexicographically;
/// terms with vanishing minor are skipped before the product is formed.
/// The result is homogeneous of degree n or identically zero.
Polynomial cuspidal_form(const PointConfiguration& a, const GaleDual& b);

/// As above, bypassing the dual-consistency assertion: `coords` is the
/// n x N coordinate block and `gale` any N x m matrix. Used for the
/// equivariance checks where modified blocks are fed in directly.
Polynomial cuspidal_form_raw(const Mat& coords, const Mat& gale);

/// True iff the cuspidal form over the canonical Gale dual vanishes.
bool is_dual_defective(const PointConfiguration& a);

/// Determinant of the n x n matrix with entry (k,l) equal to
/// sum_j A^_kj A^_lj <beta_j, t>. Equal to the cuspidal form as a
/// polynomial identity.
Polynomial hessian_form(const PointConfiguration& a, const GaleDual& b);

/// Exact rank of the (n+m) x N matrix J(1;t): top n rows carry
/// A^_ik <beta_k, t>, bottom m rows carry B^T. Requires <beta_k, t> != 0
/// for every k; throws ExceptionalParameter otherwise. The rank is
/// n+m-1 exactly when P_A(t) = 0 and n+m otherwise.
Index jacobian_rank(const PointConfiguration& a, const GaleDual& b, const Vec& t);

/// Codimension-one closed form: the cuspidal form in one variable computed
/// directly with the circuit dual normalized to beta_k = (-1)^k |A_k|
/// (1-based), after translating the first point to the origin. Returns
/// c * t^n; trivial exactly when some maximal minor |A_k| vanishes.
/// Throws WrongCodimension unless m = 1.
Polynomial codim1_form(const PointConfiguration& a);

}  // namespace cusp

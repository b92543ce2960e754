#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/configuration.hpp"
#include "cuspidal/polynomial.hpp"

namespace cusp {

/// A planar configuration rewritten with its first affinely independent
/// column triple mapped to 0, e1, e2 and moved to the front, together with
/// the canonical dual whose row for alpha_k reads
/// (|alpha_k| - 1, -alpha_k1, -alpha_k2, e_k).
struct NormalForm2D {
  PointConfiguration config;        ///< columns ordered 0, e1, e2, alpha_1..alpha_m
  Mat alphas;                       ///< 2 x m images of the remaining points
  GaleDual dual;                    ///< the canonical N x m dual
  Mat transform;                    ///< homogeneous 3x3 affine map applied
  std::array<Index, 3> triple{};    ///< original column indices of the triple
  std::vector<Index> order;         ///< column permutation applied
};

enum class ConicClass {
  pyramid,
  nonreal_parabola,
  real_parabola,
  hyperbola,
  ellipse,
  generic,
};

std::string to_string(ConicClass c);

/// Normal form via the lexicographically first affinely independent column
/// triple. Throws DegenerateConfiguration when all points are collinear.
NormalForm2D normal_form_2d(const PointConfiguration& a);

/// The symmetric kernel entry
/// g(a,d) = (a1 d2 (1-a1-d2) + a2 d1 (1-a2-d1) + (a1 d2 - a2 d1)^2) / 2.
Rational g_entry(const Vec& ak, const Vec& aj);

/// The m x m matrix Q with entries g(alpha_k, alpha_j); t^T Q t equals the
/// cuspidal form over the normal-form dual.
Mat q_matrix(const NormalForm2D& nf);

/// Signature of the quadratic cuspidal form of a planar configuration.
SignatureTriple signature_2d(const PointConfiguration& a);

/// Maps the signature through the classification table
/// (0,0;m) pyramid, (1,0;0) non-real parabola, (0,1;m-1) real parabola,
/// (1,1;m-2) hyperbola, (0,2;m-2) ellipse, (1,2;m-3) generic.
/// Throws UnrecognizedSignature for anything else.
ConicClass classify_conic(const PointConfiguration& a);

enum class OracleKind {
  pyramid,
  simplex_circuit,   ///< four points, one interior: the non-real parabola side
  vertex_circuit,    ///< four points in convex position: the real parabola side
  parabola,
  hyperbola,
  ellipse,
  degenerate,        ///< unique fitted conic is singular (line pair)
  no_conic,
  ambiguous,         ///< >= 2-dimensional conic pencil (degenerate position)
};

std::string to_string(OracleKind k);

struct OracleResult {
  OracleKind kind = OracleKind::no_conic;
  /// Fitted conic (a,b,c,d,e,f) for a x^2 + b xy + c y^2 + d x + e y + f,
  /// present when a unique conic exists.
  std::optional<Vec> conic;
  int discriminant_sign = 0;  ///< sign of b^2 - 4ac when a conic was fitted
};

/// Independent classification from conic geometry alone: pyramid shape by
/// collinearity, four-point circuits by convex position, otherwise the
/// exact kernel of the N x 6 monomial matrix. `points` is 2 x N.
/// Throws TooFewPoints when N < 4.
OracleResult conic_fit_oracle(const Mat& points);

/// The 24-term polynomial H(alpha_1, alpha_2, alpha_3); vanishes exactly
/// when the six points 0, e1, e2, alpha_1, alpha_2, alpha_3 lie on a conic.
Rational evaluate_H(const Vec& a1, const Vec& a2, const Vec& a3);

/// Determinant of (g(rows_i, cols_j)); identically zero for k >= 4, and
/// equal to H(rows) H(cols) / 4 for k = 3. `rows` and `cols` are 2 x k.
Rational g_minor(const Mat& rows, const Mat& cols);

struct ConicReport {
  SignatureTriple signature;
  ConicClass conic_class = ConicClass::generic;
  OracleResult oracle;
  bool agree = false;
};

/// Signature classification plus the independent oracle and their
/// agreement verdict.
ConicReport conic_report(const PointConfiguration& a);

}  // namespace cusp

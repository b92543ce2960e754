#include "cuspidal/cuspidal_form.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

#include "cuspidal/errors.hpp"

namespace cusp {

namespace {

bool product_is_zero(const Mat& a, const Mat& b) {
  const Mat p = a * b;
  for (Index i = 0; i < p.rows(); ++i)
    for (Index j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) return false;
  return true;
}

// Determinant of a matrix with polynomial entries by cofactor expansion
// along the first row. Fine for the n <= 5 sizes that arise here.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m, Index vars) {
  const std::size_t k = m.size();
  if (k == 0) return Polynomial::constant(vars, Rational(1));
  if (k == 1) return m[0][0];
  Polynomial total(vars);
  for (std::size_t j = 0; j < k; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(k - 1);
    for (std::size_t i = 1; i < k; ++i) {
      std::vector<Polynomial> row;
      row.reserve(k - 1);
      for (std::size_t c = 0; c < k; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(std::move(row));
    }
    Polynomial cof = m[0][j] * poly_det(sub, vars);
    if (j % 2 == 0) total += cof; else total -= cof;
  }
  return total;
}

}  // namespace

Polynomial cuspidal_form_raw(const Mat& coords, const Mat& gale) {
  const Index n = coords.rows();
  const Index big_n = coords.cols();
  const Index m = gale.cols();
  if (gale.rows() != big_n)
    throw std::invalid_argument("cuspidal_form: Gale dual row count mismatch");

  std::vector<Polynomial> linear_forms;
  linear_forms.reserve(static_cast<std::size_t>(big_n));
  for (Index k = 0; k < big_n; ++k)
    linear_forms.push_back(Polynomial::linear_form(gale.row(k).transpose()));

  Polynomial total(m);
  for_each_subset(big_n, n, [&](const std::vector<Index>& sigma) {
    Mat minor(n, n);
    for (Index j = 0; j < n; ++j)
      minor.col(j) = coords.col(sigma[static_cast<std::size_t>(j)]);
    const Rational d = det(minor);
    if (d.is_zero()) return;
    Polynomial term = Polynomial::constant(m, d * d);
    for (Index k : sigma) term = term * linear_forms[static_cast<std::size_t>(k)];
    total += term;
  });
  return total;
}

Polynomial cuspidal_form(const PointConfiguration& a, const GaleDual& b) {
  if (b.points() != a.N || b.codim() != a.m)
    throw std::invalid_argument("cuspidal_form: dual has the wrong shape");
  if (!product_is_zero(a.matrix, b.matrix))
    throw std::invalid_argument("cuspidal_form: A*B != 0, not a Gale dual");

  Polynomial p = cuspidal_form_raw(a.coords(), b.matrix);
  assert(p.is_homogeneous_of_degree(static_cast<unsigned>(a.n)));
  return p;
}

bool is_dual_defective(const PointConfiguration& a) {
  return cuspidal_form(a, gale_dual(a)).is_zero();
}

Polynomial hessian_form(const PointConfiguration& a, const GaleDual& b) {
  if (!product_is_zero(a.matrix, b.matrix))
    throw std::invalid_argument("hessian_form: A*B != 0, not a Gale dual");
  const Index n = a.n, m = a.m;
  const Mat coords = a.coords();

  std::vector<Polynomial> linear_forms;
  linear_forms.reserve(static_cast<std::size_t>(a.N));
  for (Index j = 0; j < a.N; ++j)
    linear_forms.push_back(Polynomial::linear_form(b.matrix.row(j).transpose()));

  std::vector<std::vector<Polynomial>> h(
      static_cast<std::size_t>(n),
      std::vector<Polynomial>(static_cast<std::size_t>(n), Polynomial(m)));
  for (Index k = 0; k < n; ++k) {
    for (Index l = k; l < n; ++l) {
      Polynomial entry(m);
      for (Index j = 0; j < a.N; ++j) {
        const Rational c = coords(k, j) * coords(l, j);
        if (c.is_zero()) continue;
        entry += c * linear_forms[static_cast<std::size_t>(j)];
      }
      h[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = entry;
      h[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = std::move(entry);
    }
  }
  return poly_det(h, m);
}

Index jacobian_rank(const PointConfiguration& a, const GaleDual& b, const Vec& t) {
  if (t.size() != a.m)
    throw std::invalid_argument("jacobian_rank: parameter has wrong length");
  const Index n = a.n, m = a.m;

  Vec values(a.N);
  for (Index k = 0; k < a.N; ++k) {
    values(k) = (b.matrix.row(k) * t)(0, 0);
    if (values(k).is_zero())
      throw ExceptionalParameter("jacobian_rank: <beta_k, t> = 0 at point " +
                                 std::to_string(k));
  }

  Mat j(n + m, a.N);
  const Mat coords = a.coords();
  for (Index i = 0; i < n; ++i)
    for (Index k = 0; k < a.N; ++k) j(i, k) = coords(i, k) * values(k);
  for (Index c = 0; c < m; ++c)
    for (Index k = 0; k < a.N; ++k) j(n + c, k) = b.matrix(k, c);
  return rank(j);
}

Polynomial codim1_form(const PointConfiguration& a) {
  if (a.m != 1)
    throw WrongCodimension("codim1_form: configuration has codimension " +
                           std::to_string(a.m));

  // Translate the first point to the origin; the form is unchanged and the
  // closed-form derivation applies verbatim.
  Mat coords = a.coords();
  const Vec first = coords.col(0);
  for (Index j = 0; j < a.N; ++j) coords.col(j) -= first;

  // beta_k = (-1)^k |A_k| over 1-based k; the maximal minors are unchanged
  // by the translation (a row operation on the full matrix).
  Mat gale(a.N, 1);
  for (Index k = 0; k < a.N; ++k) {
    Mat sub(a.n + 1, a.N - 1);
    for (Index j = 0, c = 0; j < a.N; ++j)
      if (j != k) sub.col(c++) = a.matrix.col(j);
    const Rational minor = det(sub);
    gale(k, 0) = ((k + 1) % 2 != 0) ? -minor : minor;
  }

  return cuspidal_form_raw(coords, gale);
}

}  // namespace cusp

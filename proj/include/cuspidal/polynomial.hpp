#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cuspidal/linalg.hpp"

namespace cusp {

/// Exponent vector; length equals the variable count of the owning polynomial.
using Monomial = std::vector<unsigned>;

inline unsigned monomial_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

/// Canonical term order: total degree descending, ties broken by the
/// exponent vector ascending lexicographically. This matches the
/// serialized form ([1,1] precedes [2,0]) and is a monomial order, so
/// single-divisor division below is exact-division complete.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db;
    return a < b;
  }
};

/// Sparse multivariate polynomial over Rational in the Gale parameters
/// t_1,...,t_m. Zero coefficients are never stored; term iteration is in
/// the canonical order, so equal polynomials serialize identically.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  explicit Polynomial(Index vars = 0) : vars_(vars) {}

  static Polynomial constant(Index vars, Rational c);
  static Polynomial variable(Index vars, Index i);
  /// <coeffs, t> as a degree-one polynomial (zero vector gives the zero polynomial).
  static Polynomial linear_form(const Vec& coeffs);

  Index vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  /// Adds c * x^mono, dropping the term if the sum cancels.
  void add_term(const Monomial& mono, const Rational& c);

  Rational coefficient(const Monomial& mono) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, Polynomial p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Rational eval(const Vec& point) const;

  /// Substitutes 0 for the given variable and removes it; the result has
  /// one variable fewer.
  Polynomial restrict_zero(Index var) const;

  /// Variable substitution t_i -> sum_j T(i,j) t_j'; T is vars x new_vars.
  Polynomial substitute_linear(const Mat& t) const;

  bool is_homogeneous_of_degree(unsigned d) const;

  /// Human-readable rendering for diagnostics, e.g. "4*t1*t2 - 4*t1^2".
  std::string str() const;

 private:
  Index vars_;
  TermMap terms_;
};

/// Exact quotient p / d, or nullopt when d does not divide p.
/// Throws std::invalid_argument when d = 0 or variable counts differ.
std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d);

/// Largest e such that <ell,t>^e divides p. Requires p != 0 and ell != 0.
unsigned linear_multiplicity(const Polynomial& p, const Vec& ell);

}  // namespace cusp

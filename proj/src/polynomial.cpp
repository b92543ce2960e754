#include "cuspidal/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace cusp {

namespace {

void require_same_vars(const Polynomial& a, const Polynomial& b, const char* op) {
  if (a.vars() != b.vars())
    throw std::invalid_argument(std::string(op) + ": variable-count mismatch");
}

}  // namespace

Polynomial Polynomial::constant(Index vars, Rational c) {
  Polynomial p(vars);
  p.add_term(Monomial(static_cast<std::size_t>(vars), 0u), c);
  return p;
}

Polynomial Polynomial::variable(Index vars, Index i) {
  if (i < 0 || i >= vars) throw std::out_of_range("Polynomial::variable: index out of range");
  Polynomial p(vars);
  Monomial m(static_cast<std::size_t>(vars), 0u);
  m[static_cast<std::size_t>(i)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

Polynomial Polynomial::linear_form(const Vec& coeffs) {
  Polynomial p(coeffs.size());
  for (Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs(i).is_zero()) continue;
    Monomial m(static_cast<std::size_t>(coeffs.size()), 0u);
    m[static_cast<std::size_t>(i)] = 1;
    p.add_term(m, coeffs(i));
  }
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(monomial_degree(terms_.begin()->first));
}

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (mono.size() != static_cast<std::size_t>(vars_))
    throw std::invalid_argument("Polynomial::add_term: wrong exponent length");
  if (c.is_zero()) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_vars(*this, o, "poly add");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_vars(*this, o, "poly sub");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_vars(a, b, "poly_mul");
  Polynomial r(a.vars());
  Monomial prod(static_cast<std::size_t>(a.vars()), 0u);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Rational& c, Polynomial p) {
  if (c.is_zero()) return Polynomial(p.vars());
  for (auto& [mono, coeff] : p.terms_) coeff *= c;
  return p;
}

Rational Polynomial::eval(const Vec& point) const {
  if (point.size() != vars_)
    throw std::invalid_argument("Polynomial::eval: point length mismatch");
  Rational total(0);
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] != 0) term *= pow(point(static_cast<Index>(i)), mono[i]);
    total += term;
  }
  return total;
}

Polynomial Polynomial::restrict_zero(Index var) const {
  if (var < 0 || var >= vars_)
    throw std::out_of_range("Polynomial::restrict_zero: index out of range");
  Polynomial r(vars_ - 1);
  for (const auto& [mono, c] : terms_) {
    if (mono[static_cast<std::size_t>(var)] != 0) continue;
    Monomial reduced;
    reduced.reserve(mono.size() - 1);
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (i != static_cast<std::size_t>(var)) reduced.push_back(mono[i]);
    r.add_term(reduced, c);
  }
  return r;
}

Polynomial Polynomial::substitute_linear(const Mat& t) const {
  if (t.rows() != vars_)
    throw std::invalid_argument("substitute_linear: matrix rows must match variable count");
  const Index out_vars = t.cols();
  std::vector<Polynomial> images;
  images.reserve(static_cast<std::size_t>(vars_));
  for (Index i = 0; i < vars_; ++i)
    images.push_back(Polynomial::linear_form(t.row(i).transpose()));

  Polynomial result(out_vars);
  for (const auto& [mono, c] : terms_) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (unsigned e = 0; e < mono[i]; ++e) term = term * images[i];
    result += term;
  }
  return result;
}

bool Polynomial::is_homogeneous_of_degree(unsigned d) const {
  for (const auto& [mono, c] : terms_)
    if (monomial_degree(mono) != d) return false;
  return true;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    const Rational mag = abs(c);
    const bool unit = (mag == Rational(1)) && monomial_degree(mono) > 0;
    if (!unit) os << mag.str();
    bool star = !unit;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (star) os << "*";
      os << "t" << (i + 1);
      if (mono[i] > 1) os << "^" << mono[i];
      star = true;
    }
  }
  return os.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& p, const Polynomial& d) {
  require_same_vars(p, d, "exact_divide");
  if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");

  const auto& dlead = *d.terms().begin();
  Polynomial q(p.vars());
  Polynomial r = p;
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().begin();
    Monomial quot(rlead.first.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (rlead.first[i] < dlead.first[i]) return std::nullopt;
      quot[i] = rlead.first[i] - dlead.first[i];
    }
    const Rational c = rlead.second / dlead.second;
    Polynomial piece(p.vars());
    piece.add_term(quot, c);
    q += piece;
    r -= piece * d;
  }
  return q;
}

unsigned linear_multiplicity(const Polynomial& p, const Vec& ell) {
  if (p.is_zero()) throw std::invalid_argument("linear_multiplicity: zero polynomial");
  const Polynomial lf = Polynomial::linear_form(ell);
  if (lf.is_zero()) throw std::invalid_argument("linear_multiplicity: zero linear form");
  unsigned e = 0;
  Polynomial cur = p;
  while (auto q = exact_divide(cur, lf)) {
    cur = std::move(*q);
    ++e;
    if (cur.is_zero()) break;  // unreachable for nonzero p, kept as a guard
  }
  return e;
}

}  // namespace cusp

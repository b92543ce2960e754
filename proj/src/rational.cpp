#include "cuspidal/rational.hpp"

#include <ostream>

namespace cusp {

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(text));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pow(const Rational& base, unsigned long exp) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), exp);
  return Rational(num, den);
}

}  // namespace cusp

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/fixtures.hpp"
#include "cuspidal/random_gen.hpp"

using namespace cusp;

namespace {

Polynomial make_poly(Index vars,
                     std::initializer_list<std::pair<Monomial, long>> terms) {
  Polynomial p(vars);
  for (const auto& [mono, c] : terms) p.add_term(mono, Rational(static_cast<int>(c)));
  return p;
}

Vec vec2(long a, long b) {
  Vec v(2);
  v << Rational(static_cast<int>(a)), Rational(static_cast<int>(b));
  return v;
}

}  // namespace

TEST_CASE("cuspidal forms of the published fixtures") {
  CHECK(cuspidal_form(fixtures::p5(), GaleDual{fixtures::p5_gale()}) ==
        make_poly(2, {{{1, 1}, 4}, {{2, 0}, -4}}));

  CHECK(cuspidal_form(fixtures::hyperbola(), GaleDual{fixtures::hyperbola_gale()}) ==
        make_poly(2, {{{2, 0}, -14400}, {{0, 2}, 9216}}));

  CHECK(cuspidal_form(fixtures::parabola(), GaleDual{fixtures::parabola_gale()}) ==
        make_poly(2, {{{2, 0}, -4}, {{1, 1}, -4}, {{0, 2}, -4}}));

  CHECK(cuspidal_form(fixtures::nine_point(), GaleDual{fixtures::nine_point_gale()}) ==
        make_poly(3, {{{0, 0, 5}, 42},
                      {{0, 1, 4}, 12},
                      {{0, 2, 3}, -30},
                      {{1, 0, 4}, 12},
                      {{1, 1, 3}, 12},
                      {{2, 0, 3}, -30}}));

  const PointConfiguration pyr = fixtures::pyramid4();
  CHECK(cuspidal_form(pyr, gale_dual(pyr)).is_zero());
}

TEST_CASE("fixture forms are homogeneous of degree n") {
  for (const auto& fx : fixtures::all()) {
    const Polynomial p = cuspidal_form(fx.config, gale_dual(fx.config));
    CHECK(p.is_homogeneous_of_degree(static_cast<unsigned>(fx.config.n)));
  }
}

TEST_CASE("dual defect flags") {
  CHECK(is_dual_defective(fixtures::pyramid4()));
  CHECK_FALSE(is_dual_defective(fixtures::p5()));
  CHECK_FALSE(is_dual_defective(fixtures::segment()));
}

TEST_CASE("hessian determinant equals the cuspidal form") {
  const PointConfiguration seg = fixtures::segment();
  const GaleDual seg_dual = gale_dual(seg);
  Polynomial two_t(1);
  two_t.add_term({1}, Rational(2));
  CHECK(hessian_form(seg, seg_dual) == two_t);
  CHECK(cuspidal_form(seg, seg_dual) == two_t);

  for (const auto& fx : fixtures::all()) {
    const GaleDual b = gale_dual(fx.config);
    CHECK(hessian_form(fx.config, b) == cuspidal_form(fx.config, b));
    if (fx.published_dual.size() > 0) {
      const GaleDual pub{fx.published_dual};
      CHECK(hessian_form(fx.config, pub) == cuspidal_form(fx.config, pub));
    }
  }
}

TEST_CASE("jacobian rank dichotomy on p5") {
  const PointConfiguration p5 = fixtures::p5();
  const GaleDual b{fixtures::p5_gale()};
  CHECK(jacobian_rank(p5, b, vec2(1, 2)) == 4);  // P(1,2) = 4
  CHECK(jacobian_rank(p5, b, vec2(1, 1)) == 3);  // P(1,1) = 0
  CHECK_THROWS_AS(jacobian_rank(p5, b, vec2(0, 1)), ExceptionalParameter);
}

TEST_CASE("codimension-one closed form") {
  Polynomial minus_two_t(1);
  minus_two_t.add_term({1}, Rational(-2));
  CHECK(codim1_form(fixtures::segment()) == minus_two_t);

  CHECK(codim1_form(fixtures::pyramid4()).is_zero());

  const PointConfiguration square = validate_normalize(
      [] {
        Mat m(3, 4);
        m << Rational(1), Rational(1), Rational(1), Rational(1),
             Rational(0), Rational(1), Rational(0), Rational(1),
             Rational(0), Rational(0), Rational(1), Rational(1);
        return m;
      }(),
      false);
  Polynomial minus_t_sq(1);
  minus_t_sq.add_term({2}, Rational(-1));
  CHECK(codim1_form(square) == minus_t_sq);

  CHECK_THROWS_AS(codim1_form(fixtures::p5()), WrongCodimension);
}

TEST_CASE("codim1 triviality matches the pyramid criterion") {
  SplitMix64 rng(3);
  ConfigStream stream(RandomConfigSpec{2, 4, 2, 29, 20});
  for (int it = 0; it < 20; ++it) {
    const PointConfiguration cfg = stream.next();
    CHECK(codim1_form(cfg).is_zero() == is_pyramid(cfg));
  }
}

TEST_CASE("restriction desk check on p5 at point 2") {
  const PointConfiguration p5 = fixtures::p5();
  const GaleDual adapted = adapted_gale_dual(p5, 2);
  const Polynomial whole = cuspidal_form(p5, adapted);
  CHECK(whole == make_poly(2, {{{1, 1}, 4}, {{2, 0}, -4}}));

  Polynomial restricted = whole.restrict_zero(1);
  Polynomial expected(1);
  expected.add_term({2}, Rational(-4));
  CHECK(restricted == expected);

  const PointConfiguration sub = subconfiguration(p5, {0, 1, 3, 4});
  Mat inherited(4, 1);
  for (Index j = 0, r = 0; j < 5; ++j)
    if (j != 2) inherited(r++, 0) = adapted.matrix(j, 0);
  CHECK(cuspidal_form(sub, GaleDual{inherited}) == expected);
}

TEST_CASE("Gale covariance spot check on p5") {
  const PointConfiguration p5 = fixtures::p5();
  const GaleDual b{fixtures::p5_gale()};
  Mat t(2, 2);
  t << Rational(1), Rational(2), Rational(0), Rational(1);
  const Polynomial mixed = cuspidal_form(p5, GaleDual{(b.matrix * t).eval()});
  CHECK(mixed == cuspidal_form(p5, b).substitute_linear(t));
}

TEST_CASE("cuspidal_form rejects non-dual inputs") {
  const PointConfiguration p5 = fixtures::p5();
  Mat wrong = fixtures::p5_gale();
  wrong(0, 0) += Rational(1);
  CHECK_THROWS_AS(cuspidal_form(p5, GaleDual{wrong}), std::invalid_argument);
}

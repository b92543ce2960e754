#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuspidal/bivariate.hpp"
#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/fixtures.hpp"
#include "cuspidal/random_gen.hpp"

using namespace cusp;

namespace {

Vec pt(long x, long y) {
  Vec v(2);
  v << Rational(static_cast<int>(x)), Rational(static_cast<int>(y));
  return v;
}

Vec ptq(Rational x, Rational y) {
  Vec v(2);
  v << x, y;
  return v;
}

PointConfiguration planar(std::initializer_list<std::pair<long, long>> pts) {
  Mat m(3, static_cast<Index>(pts.size()));
  Index j = 0;
  for (const auto& [x, y] : pts) {
    m(0, j) = Rational(1);
    m(1, j) = Rational(static_cast<int>(x));
    m(2, j) = Rational(static_cast<int>(y));
    ++j;
  }
  return validate_normalize(m, false);
}

}  // namespace

TEST_CASE("g entries") {
  CHECK(g_entry(pt(1, 2), pt(1, 2)) == Rational(-4));
  CHECK(g_entry(pt(1, 2), pt(2, 1)) == Rational(-2));
  CHECK(g_entry(pt(2, 1), pt(1, 2)) == Rational(-2));  // symmetric
  CHECK(g_entry(pt(0, 0), pt(7, -3)).is_zero());
  CHECK(g_entry(ptq(Rational(1, 3), Rational(1, 3)), ptq(Rational(1, 3), Rational(1, 3))) ==
        Rational(1, 27));
  CHECK(g_entry(pt(1, 1), pt(1, 1)) == Rational(-1));
}

TEST_CASE("parabola fixture is already in normal form") {
  const NormalForm2D nf = normal_form_2d(fixtures::parabola());
  CHECK(nf.triple == std::array<Index, 3>{0, 1, 2});
  CHECK(nf.alphas(0, 0) == Rational(1));
  CHECK(nf.alphas(1, 0) == Rational(2));
  CHECK(nf.alphas(0, 1) == Rational(2));
  CHECK(nf.alphas(1, 1) == Rational(1));
  CHECK(nf.config.matrix == fixtures::parabola().matrix);

  const Mat q = q_matrix(nf);
  Mat expected(2, 2);
  expected << Rational(-4), Rational(-2), Rational(-2), Rational(-4);
  CHECK(q == expected);
}

TEST_CASE("t^T Q t equals the cuspidal form over the normal-form dual") {
  for (const auto& cfg : {fixtures::parabola(), fixtures::hyperbola(), fixtures::p5()}) {
    const NormalForm2D nf = normal_form_2d(cfg);
    const Mat q = q_matrix(nf);
    const Polynomial p = cuspidal_form(nf.config, nf.dual);
    Polynomial quad(cfg.m);
    for (Index i = 0; i < cfg.m; ++i)
      for (Index j = 0; j < cfg.m; ++j) {
        Monomial mono(static_cast<std::size_t>(cfg.m), 0u);
        mono[static_cast<std::size_t>(i)] += 1;
        mono[static_cast<std::size_t>(j)] += 1;
        quad.add_term(mono, q(i, j));
      }
    CHECK(quad == p);
  }
}

TEST_CASE("normal form of the hyperbola fixture") {
  const NormalForm2D nf = normal_form_2d(fixtures::hyperbola());
  CHECK(nf.triple == std::array<Index, 3>{0, 1, 2});
  CHECK(nf.alphas(0, 0) == Rational(-2, 3));
  CHECK(nf.alphas(1, 0) == Rational(-1));
  CHECK(nf.alphas(0, 1) == Rational(5, 3));
  CHECK(nf.alphas(1, 1) == Rational(1));

  const Mat q = q_matrix(nf);
  CHECK(q(0, 0) == Rational(16, 9));
  CHECK(q(0, 1) == Rational(0));
  CHECK(q(1, 1) == Rational(-25, 9));
}

TEST_CASE("one-point circuits") {
  const PointConfiguration simplex = planar({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  // (1,1) is the vertex circuit, not interior: Q = [-1].
  const NormalForm2D nf = normal_form_2d(simplex);
  CHECK(q_matrix(nf)(0, 0) == Rational(-1));

  Mat m(3, 4);
  m << Rational(1), Rational(1), Rational(1), Rational(1),
       Rational(0), Rational(1), Rational(0), Rational(1, 3),
       Rational(0), Rational(0), Rational(1), Rational(1, 3);
  const NormalForm2D nfs = normal_form_2d(validate_normalize(m, false));
  CHECK(q_matrix(nfs)(0, 0) == Rational(1, 27));
}

TEST_CASE("signatures of the fixtures") {
  CHECK(signature_2d(fixtures::parabola()) == SignatureTriple{0, 2, 0});
  CHECK(signature_2d(fixtures::hyperbola()) == SignatureTriple{1, 1, 0});
  CHECK(signature_2d(fixtures::p5()) == SignatureTriple{1, 1, 0});
  CHECK(signature_2d(planar({{0, 0}, {1, 0}, {2, 0}, {0, 1}})) == SignatureTriple{0, 0, 1});
  CHECK(signature_2d(planar({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}})) ==
        SignatureTriple{0, 0, 2});
}

TEST_CASE("classification table") {
  CHECK(classify_conic(fixtures::parabola()) == ConicClass::ellipse);
  CHECK(classify_conic(fixtures::hyperbola()) == ConicClass::hyperbola);
  CHECK(classify_conic(planar({{0, 0}, {1, 0}, {2, 0}, {0, 1}})) == ConicClass::pyramid);

  Mat m(3, 4);
  m << Rational(1), Rational(1), Rational(1), Rational(1),
       Rational(0), Rational(1), Rational(0), Rational(1, 3),
       Rational(0), Rational(0), Rational(1), Rational(1, 3);
  CHECK(classify_conic(validate_normalize(m, false)) == ConicClass::nonreal_parabola);

  CHECK(classify_conic(planar({{0, 0}, {1, 0}, {0, 1}, {1, 1}})) == ConicClass::real_parabola);

  // Duplicating a normal-form vertex of a simplex circuit produces the
  // signature (1,0;1), which the table does not list.
  Mat d(3, 5);
  d << Rational(1), Rational(1), Rational(1), Rational(1), Rational(1),
       Rational(0), Rational(0), Rational(1), Rational(0), Rational(1, 3),
       Rational(0), Rational(0), Rational(0), Rational(1), Rational(1, 3);
  CHECK_THROWS_AS(classify_conic(validate_normalize(d, false)), UnrecognizedSignature);
}

TEST_CASE("conic fit oracle on the fixtures") {
  const OracleResult hyp = conic_fit_oracle(fixtures::hyperbola().coords());
  CHECK(hyp.kind == OracleKind::hyperbola);
  REQUIRE(hyp.conic.has_value());
  // x^2 - y^2 = 9 up to a scalar.
  const Vec& c = *hyp.conic;
  const Rational scale = c(0);
  REQUIRE_FALSE(scale.is_zero());
  CHECK(c(1) / scale == Rational(0));
  CHECK(c(2) / scale == Rational(-1));
  CHECK(c(3) / scale == Rational(0));
  CHECK(c(4) / scale == Rational(0));
  CHECK(c(5) / scale == Rational(-9));

  const OracleResult par = conic_fit_oracle(fixtures::parabola().coords());
  CHECK(par.kind == OracleKind::ellipse);
  REQUIRE(par.conic.has_value());
  const Vec& e = *par.conic;
  const Rational s2 = e(0);
  CHECK(e(1) / s2 == Rational(-1));
  CHECK(e(2) / s2 == Rational(1));
  CHECK(e(3) / s2 == Rational(-1));
  CHECK(e(4) / s2 == Rational(-1));
  CHECK(e(5) / s2 == Rational(0));
}

TEST_CASE("oracle circuit and pyramid branches") {
  CHECK(conic_fit_oracle(planar({{0, 0}, {1, 0}, {0, 1}, {1, 1}}).coords()).kind ==
        OracleKind::vertex_circuit);

  Mat simplex(2, 4);
  simplex << Rational(0), Rational(1), Rational(0), Rational(1, 3),
             Rational(0), Rational(0), Rational(1), Rational(1, 3);
  CHECK(conic_fit_oracle(simplex).kind == OracleKind::simplex_circuit);

  CHECK(conic_fit_oracle(planar({{0, 0}, {1, 0}, {2, 0}, {0, 1}}).coords()).kind ==
        OracleKind::pyramid);

  Mat three(2, 3);
  three.setZero();
  CHECK_THROWS_AS(conic_fit_oracle(three), TooFewPoints);

  // Six generic points admit no conic.
  CHECK(conic_fit_oracle(planar({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 3}, {-1, 2}}).coords())
            .kind == OracleKind::no_conic);
}

TEST_CASE("H polynomial values") {
  // Points on the circle x^2 + y^2 = x + y through 0, e1, e2.
  CHECK(evaluate_H(pt(1, 1), ptq(Rational(3, 5), Rational(6, 5)),
                   ptq(Rational(2, 5), Rational(6, 5)))
            .is_zero());
  CHECK(evaluate_H(pt(1, 1), pt(2, 3), pt(5, 7)) == Rational(36));
  CHECK(evaluate_H(pt(0, 0), pt(2, 3), pt(5, 7)).is_zero());
  CHECK(evaluate_H(pt(2, 3), pt(0, 0), pt(5, 7)).is_zero());
}

TEST_CASE("g minors") {
  Mat rows(2, 2);
  rows.col(0) = pt(1, 2);
  rows.col(1) = pt(2, 1);
  CHECK(g_minor(rows, rows) == Rational(12));

  SplitMix64 rng(91);
  for (int it = 0; it < 20; ++it) {
    Mat r4(2, 4), c4(2, 4);
    for (Index j = 0; j < 4; ++j) {
      r4.col(j) = ptq(random_rational(rng, 6, 3), random_rational(rng, 6, 3));
      c4.col(j) = ptq(random_rational(rng, 6, 3), random_rational(rng, 6, 3));
    }
    CHECK(g_minor(r4, c4).is_zero());

    const Mat r3 = r4.leftCols(3), c3 = c4.leftCols(3);
    CHECK(g_minor(r3, c3) == evaluate_H(r3.col(0), r3.col(1), r3.col(2)) *
                                 evaluate_H(c3.col(0), c3.col(1), c3.col(2)) / Rational(4));
  }

  Mat bad(2, 3);
  bad.setZero();
  CHECK_THROWS_AS(g_minor(rows, bad), std::invalid_argument);
}

TEST_CASE("conic reports agree on the fixtures") {
  const ConicReport hyp = conic_report(fixtures::hyperbola());
  CHECK(hyp.conic_class == ConicClass::hyperbola);
  CHECK(hyp.oracle.kind == OracleKind::hyperbola);
  CHECK(hyp.agree);

  const ConicReport par = conic_report(fixtures::parabola());
  CHECK(par.conic_class == ConicClass::ellipse);
  CHECK(par.agree);

  const ConicReport pyr = conic_report(planar({{0, 0}, {1, 0}, {2, 0}, {0, 1}}));
  CHECK(pyr.conic_class == ConicClass::pyramid);
  CHECK(pyr.agree);
}

TEST_CASE("signature is invariant under admissible renormalization") {
  // p5 has several affinely independent triples; forcing a different one by
  // permuting columns must not change the signature.
  const PointConfiguration p5 = fixtures::p5();
  Mat permuted = p5.matrix;
  permuted.col(0).swap(permuted.col(4));
  permuted.col(1).swap(permuted.col(3));
  CHECK(signature_2d(validate_normalize(permuted, false)) == signature_2d(p5));
}

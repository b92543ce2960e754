#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/fixtures.hpp"
#include "cuspidal/iterated_circuits.hpp"

using namespace cusp;

namespace {

PointConfiguration unit_square() {
  Mat m(3, 4);
  m << Rational(1), Rational(1), Rational(1), Rational(1),
       Rational(0), Rational(1), Rational(0), Rational(1),
       Rational(0), Rational(0), Rational(1), Rational(1);
  return validate_normalize(m, false);
}

}  // namespace

TEST_CASE("a circuit is an iterated circuit with one block") {
  const auto w = is_iterated_circuit(fixtures::segment());
  REQUIRE(w.has_value());
  CHECK(w->blocks.size() == 1);
  CHECK(w->blocks[0].dim == 1);
  CHECK(witness_is_sound(fixtures::segment(), *w));
}

TEST_CASE("the unit square is a planar circuit block") {
  const auto w = is_iterated_circuit(unit_square());
  REQUIRE(w.has_value());
  CHECK(w->blocks.size() == 1);
  CHECK(w->blocks[0].dim == 2);
  CHECK(witness_is_sound(unit_square(), *w));
}

TEST_CASE("pyramids admit no iterated circuit") {
  CHECK_FALSE(is_iterated_circuit(fixtures::pyramid4()).has_value());
  CHECK_FALSE(contains_iterated_circuit(fixtures::pyramid4()).has_value());
}

TEST_CASE("p5 decomposes as two one-dimensional circuit blocks") {
  const auto w = is_iterated_circuit(fixtures::p5());
  REQUIRE(w.has_value());
  CHECK(w->base_point == 0);
  REQUIRE(w->blocks.size() == 2);
  CHECK(w->blocks[0].points == std::vector<Index>{1, 2});
  CHECK(w->blocks[0].dim == 1);
  CHECK(w->blocks[1].points == std::vector<Index>{3, 4});
  CHECK(w->blocks[1].dim == 1);
  CHECK(witness_is_sound(fixtures::p5(), *w));
}

TEST_CASE("witness search is deterministic") {
  const auto w1 = is_iterated_circuit(fixtures::p5());
  const auto w2 = is_iterated_circuit(fixtures::p5());
  REQUIRE(w1.has_value());
  REQUIRE(w2.has_value());
  CHECK(w1->base_point == w2->base_point);
  CHECK(w1->subset == w2->subset);
  CHECK(w1->transform == w2->transform);
}

TEST_CASE("containment search on the hyperbola fixture") {
  // No three fixture points are collinear, so the full five-point set is
  // not an iterated circuit; the first four points form a circuit.
  const auto w = contains_iterated_circuit(fixtures::hyperbola());
  REQUIRE(w.has_value());
  CHECK(w->subset == std::vector<Index>{0, 1, 2, 3});
  CHECK(w->blocks.size() == 1);
  CHECK(witness_is_sound(fixtures::hyperbola(), *w));
}

TEST_CASE("containment search on the nine-point fixture") {
  const auto w = contains_iterated_circuit(fixtures::nine_point());
  REQUIRE(w.has_value());
  CHECK(witness_is_sound(fixtures::nine_point(), *w));
}

TEST_CASE("containment is monotone on the p5 fixture") {
  // The subset {0,1,3,4} is a circuit, so both it and the whole
  // configuration must contain an iterated circuit.
  const PointConfiguration sub = subconfiguration(fixtures::p5(), {0, 1, 3, 4});
  CHECK(contains_iterated_circuit(sub).has_value());
  CHECK(contains_iterated_circuit(fixtures::p5()).has_value());
}

TEST_CASE("classify reports are consistent on the fixtures") {
  const ClassifyReport pyr = classify(fixtures::pyramid4());
  CHECK(pyr.dual_defective);
  CHECK_FALSE(pyr.witness.has_value());
  CHECK(pyr.consistent);

  const ClassifyReport p5 = classify(fixtures::p5());
  CHECK_FALSE(p5.dual_defective);
  REQUIRE(p5.witness.has_value());
  CHECK(p5.consistent);
  CHECK(witness_is_sound(fixtures::p5(), *p5.witness));

  const ClassifyReport hyp = classify(fixtures::hyperbola());
  CHECK_FALSE(hyp.dual_defective);
  CHECK(hyp.witness.has_value());
  CHECK(hyp.consistent);

  for (const auto& fx : fixtures::all()) {
    const ClassifyReport r = classify(fx.config);
    CHECK(r.consistent);
    CHECK(r.dual_defective == !r.witness.has_value());
  }
}

TEST_CASE("point-count arithmetic rules out impossible shapes quickly") {
  // An iterated circuit needs N = 1 + n + j with 1 <= j <= n, so a simplex
  // (m = 0) is never one.
  Mat simplex(3, 3);
  simplex << Rational(1), Rational(1), Rational(1),
             Rational(0), Rational(1), Rational(0),
             Rational(0), Rational(0), Rational(1);
  CHECK_FALSE(is_iterated_circuit(validate_normalize(simplex, false)).has_value());
}

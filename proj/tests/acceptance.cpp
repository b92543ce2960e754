// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is exact; the stated wall-clock budgets are asserted.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cuspidal/bivariate.hpp"
#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/fixtures.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/polynomial.hpp"
#include "cuspidal/suites.hpp"

#ifndef CUSPIDAL_CLI_PATH
#define CUSPIDAL_CLI_PATH "cuspidal"
#endif
#ifndef CUSPIDAL_FIXTURES_DIR
#define CUSPIDAL_FIXTURES_DIR "fixtures"
#endif

using namespace cusp;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }

  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void finish(double budget_s) {
    const double t = elapsed_s();
    if (budget_s > 0 && t > budget_s)
      problems_.push_back("exceeded " + std::to_string(budget_s) + " s budget");
    if (problems_.empty()) {
      std::printf("PASS criterion %2d: %s (%.2f s)\n", number_, title_.c_str(), t);
    } else {
      ++g_failures;
      std::printf("FAIL criterion %2d: %s (%.2f s)\n", number_, title_.c_str(), t);
      for (const auto& p : problems_) std::printf("      - %s\n", p.c_str());
    }
  }

 private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> problems_;
};

std::string run_cli(const std::string& args, int* exit_code) {
  const std::string cmd = std::string(CUSPIDAL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Polynomial make_poly(Index vars, std::initializer_list<std::pair<Monomial, long>> terms) {
  Polynomial p(vars);
  for (const auto& [mono, c] : terms) p.add_term(mono, Rational(static_cast<int>(c)));
  return p;
}

void check_suite(Criterion& c, const std::string& name, std::uint64_t seed, std::size_t count) {
  const SuiteReport rep = run_suite(name, seed, count);
  c.expect(rep.ok(), name + ": " + std::to_string(rep.failures.size()) + " failures (first: " +
                         (rep.failures.empty() ? "" : rep.failures.front().expected + " vs " +
                                                          rep.failures.front().actual) +
                         ")");
}

bool conic_proportional(const Vec& got, const std::vector<long>& want) {
  Index pivot = -1;
  for (Index i = 0; i < 6; ++i)
    if (want[static_cast<std::size_t>(i)] != 0) { pivot = i; break; }
  if (pivot < 0 || got(pivot).is_zero()) return false;
  const Rational scale = got(pivot) / Rational(static_cast<int>(want[static_cast<std::size_t>(pivot)]));
  for (Index i = 0; i < 6; ++i)
    if (got(i) != scale * Rational(static_cast<int>(want[static_cast<std::size_t>(i)])))
      return false;
  return true;
}

void criterion1() {
  Criterion c(1, "p5 emits 4 t1 t2 - 4 t1^2 via the CLI with the published dual");
  int rc = 0;
  const std::string out = run_cli(std::string("form ") + CUSPIDAL_FIXTURES_DIR + "/p5.json" +
                                      " --gale " + CUSPIDAL_FIXTURES_DIR + "/p5_gale.json",
                                  &rc);
  c.expect(rc == 0, "CLI exit code " + std::to_string(rc));
  const std::string expected =
      R"({"vars":2,"terms":[{"exp":[1,1],"coeff":"4"},{"exp":[2,0],"coeff":"-4"}]})" "\n";
  c.expect(out == expected, "emitted: " + out);
  c.finish(1.0);
}

void criterion2() {
  Criterion c(2, "nine-point form equals 6 t3^3 (7 t3^2 + ...) with t3-multiplicity 3");
  const Polynomial p =
      cuspidal_form(fixtures::nine_point(), GaleDual{fixtures::nine_point_gale()});
  const Polynomial expected = make_poly(3, {{{0, 0, 5}, 42},
                                            {{0, 1, 4}, 12},
                                            {{0, 2, 3}, -30},
                                            {{1, 0, 4}, 12},
                                            {{1, 1, 3}, 12},
                                            {{2, 0, 3}, -30}});
  c.expect(p == expected, "form mismatch: " + p.str());
  Vec t3 = Vec::Zero(3);
  t3(2) = Rational(1);
  c.expect(linear_multiplicity(p, t3) == 3, "t3 multiplicity != 3");
  c.finish(1.0);
}

void criterion3() {
  Criterion c(3, "hyperbola: form, signature (1,1;0), class, fitted conic x^2 - y^2 = 9");
  const PointConfiguration cfg = fixtures::hyperbola();
  const Polynomial p = cuspidal_form(cfg, GaleDual{fixtures::hyperbola_gale()});
  c.expect(p == make_poly(2, {{{2, 0}, -14400}, {{0, 2}, 9216}}), "form mismatch: " + p.str());
  const ConicReport rep = conic_report(cfg);
  c.expect(rep.signature == SignatureTriple{1, 1, 0}, "signature mismatch");
  c.expect(rep.conic_class == ConicClass::hyperbola, "class mismatch");
  c.expect(rep.oracle.conic.has_value() && conic_proportional(*rep.oracle.conic, {1, 0, -1, 0, 0, -9}),
           "fitted conic is not x^2 - y^2 - 9 up to scale");
  c.expect(rep.agree, "classifier and oracle disagree");
  c.finish(0);
}

void criterion4() {
  Criterion c(4, "parabola fixture: form, signature (0,2;0), ellipse, fitted conic");
  const PointConfiguration cfg = fixtures::parabola();
  const Polynomial p = cuspidal_form(cfg, GaleDual{fixtures::parabola_gale()});
  c.expect(p == make_poly(2, {{{2, 0}, -4}, {{1, 1}, -4}, {{0, 2}, -4}}),
           "form mismatch: " + p.str());
  const ConicReport rep = conic_report(cfg);
  c.expect(rep.signature == SignatureTriple{0, 2, 0}, "signature mismatch");
  c.expect(rep.conic_class == ConicClass::ellipse, "class mismatch");
  c.expect(rep.oracle.conic.has_value() &&
               conic_proportional(*rep.oracle.conic, {1, -1, 1, -1, -1, 0}),
           "fitted conic is not x^2 - xy + y^2 - x - y up to scale");
  c.expect(rep.agree, "classifier and oracle disagree");
  c.finish(0);
}

void criterion5() {
  Criterion c(5, "Hessian identity on 200 seeded instances (n in 1..3, N <= 8) and fixtures");
  check_suite(c, "hessian", 20240801, 200);
  c.finish(30.0);
}

void criterion6() {
  Criterion c(6, "Jacobian rank dichotomy on 200 seeded instances, 5 parameters each");
  check_suite(c, "jacobian", 20240806, 200);
  c.finish(60.0);
}

void criterion7() {
  Criterion c(7, "Esterov equivalence: exhaustive planar sweep plus 100 seeded n=3 instances");
  check_suite(c, "esterov", 20240807, 0);    // exhaustive sweep
  check_suite(c, "esterov", 20240807, 100);  // seeded n = 3
  c.finish(600.0);
}

void criterion8() {
  Criterion c(8,
              "factorizations: restriction 200, diagonal/leading 200, divisibility 200, "
              "parallel rows 100");
  check_suite(c, "restriction", 20240808, 200);
  check_suite(c, "diagonal-product", 20240809, 200);
  check_suite(c, "divisibility", 20240810, 200);
  check_suite(c, "parallel-rows", 20240811, 100);
  c.finish(120.0);
}

void criterion9() {
  Criterion c(9, "bivariate table on 300 class instances; 1000 G4 minors and G3 identities");
  check_suite(c, "bivariate-table", 20240812, 300);
  check_suite(c, "g4-vanish", 20240813, 1000);
  c.finish(60.0);
}

void criterion10() {
  Criterion c(10, "equivariance: Gale covariance, translation, row mixing on 100 instances");
  check_suite(c, "equivariance", 20240814, 100);
  c.finish(0);
}

void criterion11() {
  Criterion c(11, "Gale minor duality constant on 200 instances and all fixtures");
  check_suite(c, "lemma-schur", 20240815, 200);
  c.finish(0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}

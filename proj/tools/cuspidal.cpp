// Command-line front end: exact cuspidal forms, Gale duals, dual-defect
// classification and the theorem verification suites.
//
// Exit codes: 0 success/consistent, 1 property failure, 2 input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cuspidal/cuspidal_form.hpp"
#include "cuspidal/errors.hpp"
#include "cuspidal/iterated_circuits.hpp"
#include "cuspidal/json_io.hpp"
#include "cuspidal/suites.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw cusp::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cusp::PointConfiguration load_config(const std::string& path) {
  return cusp::parse_config(slurp(path));
}

void emit(const cusp::Json& doc) { std::cout << doc.dump() << "\n"; }

int cmd_validate(const std::string& path) {
  emit(cusp::config_to_json(load_config(path)));
  return kOk;
}

int cmd_gale(const std::string& path) {
  const auto cfg = load_config(path);
  cusp::Json doc;
  doc["matrix"] = cusp::matrix_to_json(cusp::gale_dual(cfg).matrix);
  emit(doc);
  return kOk;
}

int cmd_form(const std::string& path, const std::string& gale_path) {
  const auto cfg = load_config(path);
  if (cfg.m == 0) {
    cusp::Json doc;
    doc["vars"] = 0;
    doc["terms"] = cusp::Json::array();
    doc["note"] = "codimension zero: no discriminant parameters";
    emit(doc);
    return kOk;
  }
  cusp::GaleDual dual{cusp::Mat()};
  if (!gale_path.empty()) {
    cusp::Mat b = cusp::parse_matrix_document(slurp(gale_path));
    if (b.rows() != cfg.N || b.cols() != cfg.m)
      throw cusp::ParseError("gale matrix must be N x m = " + std::to_string(cfg.N) + " x " +
                             std::to_string(cfg.m));
    const cusp::Mat prod = cfg.matrix * b;
    for (cusp::Index i = 0; i < prod.rows(); ++i)
      for (cusp::Index j = 0; j < prod.cols(); ++j)
        if (!prod(i, j).is_zero()) throw cusp::ParseError("supplied matrix is not a Gale dual: A*B != 0");
    if (cusp::rank(b) != cfg.m) throw cusp::ParseError("supplied Gale dual is rank-deficient");
    dual = cusp::GaleDual{std::move(b)};
  } else {
    dual = cusp::gale_dual(cfg);
  }
  emit(cusp::polynomial_to_json(cusp::cuspidal_form(cfg, dual)));
  return kOk;
}

int cmd_classify(const std::string& path) {
  const auto report = cusp::classify(load_config(path));
  emit(cusp::classify_report_to_json(report));
  return kOk;
}

int cmd_conic(const std::string& path) {
  const auto cfg = load_config(path);
  if (cfg.n != 2) throw cusp::ParseError("conic: configuration is not planar (n = 2 required)");
  const auto report = cusp::conic_report(cfg);
  emit(cusp::conic_report_to_json(report));
  return report.agree ? kOk : kPropertyFailure;
}

int cmd_hessian_check(const std::string& path) {
  const auto cfg = load_config(path);
  const auto dual = cusp::gale_dual(cfg);
  const auto p = cusp::cuspidal_form(cfg, dual);
  const auto h = cusp::hessian_form(cfg, dual);
  cusp::Json doc;
  doc["equal"] = (p == h);
  doc["form"] = cusp::polynomial_to_json(p);
  emit(doc);
  return p == h ? kOk : kPropertyFailure;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t count) {
  const cusp::SuiteReport rep = cusp::run_suite(suite, seed, count);
  cusp::Json doc;
  doc["suite"] = rep.suite;
  doc["instances"] = rep.instances;
  doc["seed"] = rep.seed;
  cusp::Json fails = cusp::Json::array();
  for (const auto& f : rep.failures) {
    cusp::Json jf;
    jf["index"] = f.index;
    jf["instance"] = f.instance;
    jf["expected"] = f.expected;
    jf["actual"] = f.actual;
    fails.push_back(std::move(jf));
  }
  doc["failures"] = std::move(fails);
  doc["elapsed_ms"] = rep.elapsed_ms;
  emit(doc);
  return rep.ok() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cuspidal forms of rational point configurations"};
  app.require_subcommand(1);

  std::string input, gale_path, suite;
  std::uint64_t seed = 1;
  std::size_t count = 100;

  auto* validate = app.add_subcommand("validate", "normalize and echo a configuration");
  validate->add_option("input", input, "configuration file (default: stdin)");

  auto* gale = app.add_subcommand("gale", "emit the canonical Gale dual");
  gale->add_option("input", input, "configuration file (default: stdin)");

  auto* form = app.add_subcommand("form", "emit the cuspidal form P_A(t)");
  form->add_option("input", input, "configuration file (default: stdin)");
  form->add_option("--gale", gale_path, "use this Gale dual instead of the canonical one");

  auto* classify = app.add_subcommand("classify", "dual defect and iterated-circuit report");
  classify->add_option("input", input, "configuration file (default: stdin)");

  auto* conic = app.add_subcommand("conic", "planar signature classification with oracle");
  conic->add_option("input", input, "configuration file (default: stdin)");

  auto* hessian = app.add_subcommand("hessian-check", "compare Hessian and cuspidal forms");
  hessian->add_option("input", input, "configuration file (default: stdin)");

  auto* verify = app.add_subcommand("verify", "run a theorem suite on seeded instances");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "generator seed (default 1)");
  verify->add_option("--count", count, "instance count (esterov: 0 = exhaustive sweep)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(input);
    if (gale->parsed()) return cmd_gale(input);
    if (form->parsed()) return cmd_form(input, gale_path);
    if (classify->parsed()) return cmd_classify(input);
    if (conic->parsed()) return cmd_conic(input);
    if (hessian->parsed()) return cmd_hessian_check(input);
    if (verify->parsed()) return cmd_verify(suite, seed, count);
  } catch (const cusp::InconsistencyDetected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const cusp::ConsistencyFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const cusp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

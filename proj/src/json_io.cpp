#include "cuspidal/json_io.hpp"

#include <istream>
#include <sstream>

#include "cuspidal/errors.hpp"

namespace cusp {

namespace {

Rational entry_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return Rational(mpz_class(j.dump()));
  }
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("matrix entry must be an integer or a rational string, got " + j.dump());
}

Json entry_to_json(const Rational& r) {
  if (r.is_integer() && r.num().fits_slong_p())
    return Json(r.num().get_si());
  return Json(r.str());
}

}  // namespace

Json matrix_to_json(const Mat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("matrix must be a non-empty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  if (cols == 0) throw ParseError("matrix rows must be non-empty");
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError("matrix row " + std::to_string(i) + " has inconsistent length");
    for (Index c = 0; c < cols; ++c)
      m(i, c) = entry_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

PointConfiguration parse_config(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix"))
    throw ParseError("configuration document must be an object with a \"matrix\" field");
  bool homogenize = false;
  if (doc.contains("homogenize")) {
    if (!doc["homogenize"].is_boolean()) throw ParseError("\"homogenize\" must be a boolean");
    homogenize = doc["homogenize"].get<bool>();
  }
  return validate_normalize(matrix_from_json(doc["matrix"]), homogenize);
}

PointConfiguration parse_config_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Json config_to_json(const PointConfiguration& a) {
  Json j;
  j["matrix"] = matrix_to_json(a.matrix);
  j["homogenize"] = false;  // already normalized
  j["n"] = a.n;
  j["N"] = a.N;
  j["m"] = a.m;
  return j;
}

Mat parse_matrix_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix"))
    throw ParseError("matrix document must be an object with a \"matrix\" field");
  return matrix_from_json(doc["matrix"]);
}

Json polynomial_to_json(const Polynomial& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    Json term;
    term["exp"] = mono;
    term["coeff"] = coeff.str();
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
    throw ParseError("polynomial document needs \"vars\" and \"terms\"");
  Polynomial p(j["vars"].get<Index>());
  for (const auto& term : j["terms"]) {
    Monomial mono = term["exp"].get<Monomial>();
    p.add_term(mono, Rational::parse(term["coeff"].get<std::string>()));
  }
  return p;
}

Json witness_to_json(const IteratedCircuitWitness& w) {
  Json j;
  j["base_point"] = w.base_point;
  Json blocks = Json::array();
  for (const CircuitBlock& b : w.blocks) {
    Json jb;
    jb["points"] = b.points;
    jb["dim"] = b.dim;
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  j["subset"] = w.subset;
  j["transform"] = matrix_to_json(w.transform);
  return j;
}

Json classify_report_to_json(const ClassifyReport& r) {
  Json j;
  j["dual_defective"] = r.dual_defective;
  j["witness"] = r.witness ? witness_to_json(*r.witness) : Json(nullptr);
  j["consistent"] = r.consistent;
  return j;
}

Json signature_to_json(const SignatureTriple& s) {
  return Json::array({s.positives, s.negatives, s.zeros});
}

Json conic_report_to_json(const ConicReport& r) {
  Json j;
  j["signature"] = signature_to_json(r.signature);
  j["class"] = to_string(r.conic_class);
  j["oracle"] = to_string(r.oracle.kind);
  j["agree"] = r.agree;
  if (r.oracle.conic) {
    Json coeffs = Json::array();
    for (Index i = 0; i < r.oracle.conic->size(); ++i)
      coeffs.push_back((*r.oracle.conic)(i).str());
    j["conic"] = std::move(coeffs);
  }
  return j;
}

}  // namespace cusp

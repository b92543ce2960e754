#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cuspidal/bivariate.hpp"
#include "cuspidal/configuration.hpp"
#include "cuspidal/iterated_circuits.hpp"
#include "cuspidal/polynomial.hpp"

namespace cusp {

// Emission uses ordered JSON so documents are byte-reproducible.
using Json = nlohmann::ordered_json;

Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j);

/// Configuration document: {"matrix": [[...]], "homogenize": bool}.
/// Entries are JSON integers or reduced rational strings "p/q".
PointConfiguration parse_config(const std::string& text);
PointConfiguration parse_config_stream(std::istream& in);
Json config_to_json(const PointConfiguration& a);

/// Matrix document {"matrix": [[...]]} (Gale duals and friends).
Mat parse_matrix_document(const std::string& text);

/// Polynomial document: {"vars": m, "terms": [{"exp": [...], "coeff": "p/q"}]}
/// with terms in the canonical order.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

Json witness_to_json(const IteratedCircuitWitness& w);
Json classify_report_to_json(const ClassifyReport& r);
Json conic_report_to_json(const ConicReport& r);
Json signature_to_json(const SignatureTriple& s);

}  // namespace cusp

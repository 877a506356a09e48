#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qrw/bialgebra.hpp"
#include "qrw/linalg.hpp"
#include "qrw/operator_map.hpp"

namespace qrw {

using Json = nlohmann::json;

// Complex entries are [re, im] pairs (a bare number is read as real). Each
// component is a JSON number or a string, either decimal or rational "p/q".
double parse_real(const Json& j);
Complex parse_complex(const Json& j);
Vector parse_vector(const Json& j);
RowVector parse_row(const Json& j);
Matrix parse_matrix(const Json& j);

Json to_json(Complex z);
Json to_json(const Vector& v);
Json to_json(const RowVector& v);
Json to_json(const Matrix& m);

/// Parse a bialgebra document without checking its axioms.
CounitalBialgebra parse_bialgebra(const Json& doc);
Json bialgebra_to_json(const CounitalBialgebra& b);

/// Parse and verify. Throws ParseError on malformed documents and AxiomError
/// naming the first failed axiom and its basis indices.
BialgebraPtr load_bialgebra(const Json& doc, double tol = 1e-12);
BialgebraPtr load_bialgebra_file(const std::string& path, double tol = 1e-12);

/// {"values": [matrix per basis element]}.
Json operator_map_to_json(const OperatorMap& phi);
OperatorMap parse_operator_map(const Json& doc, BialgebraPtr source);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);

}  // namespace qrw

#include "qrw/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qrw/errors.hpp"

namespace qrw {

namespace {

double parse_decimal(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) throw ParseError("not a number: \"" + s + "\"");
  return v;
}

std::string join(const std::vector<Index>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? ", " : "") << idx[i];
  return os.str();
}

Tensor3 parse_tensor(const Json& j, Index n) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) throw ParseError("tensor must have dim slices");
  Tensor3 t(n, n, n);
  for (Index i = 0; i < n; ++i) {
    const Matrix m = parse_matrix(j[static_cast<std::size_t>(i)]);
    if (m.rows() != n || m.cols() != n) throw ParseError("tensor slice must be dim x dim");
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) t(i, a, b) = m(a, b);
  }
  return t;
}

Json tensor_to_json(const Tensor3& t) {
  Json out = Json::array();
  for (Index i = 0; i < t.extent(0); ++i) out.push_back(to_json(t.slice(i)));
  return out;
}

}  // namespace

double parse_real(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_decimal(s);
    const double num = parse_decimal(s.substr(0, slash));
    const double den = parse_decimal(s.substr(slash + 1));
    if (den == 0.0) throw ParseError("zero denominator in \"" + s + "\"");
    return num / den;
  }
  throw ParseError("expected a real number, got " + j.dump());
}

Complex parse_complex(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw ParseError("complex entry must be [re, im], got " + j.dump());
    return {parse_real(j[0]), parse_real(j[1])};
  }
  return {parse_real(j), 0.0};
}

Vector parse_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of complex entries");
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = parse_complex(j[i]);
  return v;
}

RowVector parse_row(const Json& j) { return parse_vector(j).transpose(); }

Matrix parse_matrix(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix (array of rows)");
  if (j.empty()) return Matrix(0, 0);
  const auto cols = j[0].size();
  Matrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ParseError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = parse_complex(j[r][c]);
  }
  return m;
}

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RowVector& v) { return to_json(Vector(v.transpose())); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

CounitalBialgebra parse_bialgebra(const Json& doc) {
  try {
    CounitalBialgebra b;
    const auto n = doc.at("dim").get<Index>();
    if (n <= 0) throw ParseError("dim must be positive");
    b.name = doc.value("name", std::string("file"));
    if (doc.contains("labels")) {
      b.labels = doc.at("labels").get<std::vector<std::string>>();
    } else {
      for (Index i = 0; i < n; ++i) b.labels.push_back("b" + std::to_string(i));
    }
    if (static_cast<Index>(b.labels.size()) != n) throw ParseError("label count differs from dim");
    b.product = parse_tensor(doc.at("structure_constants"), n);
    b.involution = parse_matrix(doc.at("involution"));
    b.unit = parse_vector(doc.at("unit"));
    b.coproduct = parse_tensor(doc.at("coproduct"), n);
    b.counit = parse_row(doc.at("counit"));
    if (b.involution.rows() != n || b.involution.cols() != n) throw ParseError("involution must be dim x dim");
    if (b.unit.size() != n || b.counit.size() != n) throw ParseError("unit and counit must have dim entries");
    for (const auto& c : doc.value("characters", Json::array())) {
      b.characters.push_back(parse_row(c));
      if (b.characters.back().size() != n) throw ParseError("character must have dim entries");
    }
    const auto& rep = doc.at("faithful_rep");
    if (static_cast<Index>(rep.size()) != n) throw ParseError("faithful_rep needs one matrix per basis element");
    for (const auto& r : rep) {
      b.rep.push_back(parse_matrix(r));
      const auto& m = b.rep.back();
      if (m.rows() != m.cols() || m.rows() != b.rep.front().rows())
        throw ParseError("faithful_rep matrices must be square and of equal size");
    }
    return b;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bialgebra document: ") + e.what());
  }
}

Json bialgebra_to_json(const CounitalBialgebra& b) {
  Json doc;
  doc["name"] = b.name;
  doc["dim"] = b.dim();
  doc["labels"] = b.labels;
  doc["structure_constants"] = tensor_to_json(b.product);
  doc["involution"] = to_json(b.involution);
  doc["unit"] = to_json(b.unit);
  doc["coproduct"] = tensor_to_json(b.coproduct);
  doc["counit"] = to_json(b.counit);
  doc["characters"] = Json::array();
  for (const auto& c : b.characters) doc["characters"].push_back(to_json(c));
  doc["faithful_rep"] = Json::array();
  for (const auto& r : b.rep) doc["faithful_rep"].push_back(to_json(r));
  return doc;
}

Json operator_map_to_json(const OperatorMap& phi) {
  Json values = Json::array();
  for (const auto& m : phi.values()) values.push_back(to_json(m));
  return {{"values", values}};
}

OperatorMap parse_operator_map(const Json& doc, BialgebraPtr source) {
  if (!doc.contains("values") || !doc.at("values").is_array()) throw ParseError("operator map needs a \"values\" list");
  std::vector<Matrix> values;
  for (const auto& m : doc.at("values")) values.push_back(parse_matrix(m));
  return {std::move(source), std::move(values)};
}

BialgebraPtr load_bialgebra(const Json& doc, double tol) {
  auto b = std::make_shared<CounitalBialgebra>(parse_bialgebra(doc));
  const auto report = verify_bialgebra(*b);
  if (const auto* fail = report.first_failure(tol)) {
    std::string msg = fail->axiom + " violated";
    if (!fail->where.empty()) msg += (fail->where.size() == 1 ? " at basis index " : " at basis indices ") + join(fail->where);
    std::ostringstream os;
    os << msg << " (residual " << fail->residual << ")";
    throw AxiomError(os.str());
  }
  if (!(report.faithfulness > tol)) throw AxiomError("representation is not faithful");
  return b;
}

BialgebraPtr load_bialgebra_file(const std::string& path, double tol) {
  return load_bialgebra(read_json_file(path), tol);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace qrw

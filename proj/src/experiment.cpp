#include "qrw/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "qrw/errors.hpp"
#include "qrw/json_io.hpp"
#include "qrw/walk.hpp"

#ifndef QRW_DATA_DIR
#define QRW_DATA_DIR "data"
#endif

namespace qrw {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* env = std::getenv("QRWLAB_LOG_LEVEL");
  if (env == nullptr) return LogLevel::info;
  const std::string v(env);
  if (v == "quiet" || v == "error" || v == "off") return LogLevel::quiet;
  if (v == "debug") return LogLevel::debug;
  return LogLevel::info;
}

void log(LogLevel level, const std::string& msg) {
  if (level <= log_level()) std::cerr << "[qrwlab] " << msg << "\n";
}

std::string fmt(double x, const char* spec = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

FiniteGroup parse_group(const json& spec, const fs::path& base) {
  if (spec.is_object()) {
    if (!spec.contains("file")) throw ConfigError("group object needs a \"file\" key");
    return FiniteGroup::load((base / spec.at("file").get<std::string>()).string());
  }
  const auto s = spec.get<std::string>();
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw ConfigError("group must be \"cyclic:n\", \"symmetric:k\" or {\"file\": ...}");
  const auto kind = s.substr(0, colon);
  const int arg = std::stoi(s.substr(colon + 1));
  if (kind == "cyclic") return FiniteGroup::cyclic(arg);
  if (kind == "symmetric") return FiniteGroup::symmetric(arg);
  throw ConfigError("unknown group family \"" + kind + "\"");
}

BialgebraPtr parse_bialgebra_section(const json& spec, const fs::path& base) {
  if (spec.contains("file"))
    return std::make_shared<const CounitalBialgebra>(
        parse_bialgebra(read_json_file((base / spec.at("file").get<std::string>()).string())));
  const auto builtin = spec.at("builtin").get<std::string>();
  const auto group = parse_group(spec.at("group"), base);
  if (builtin == "function-algebra") return build_function_algebra(group);
  if (builtin == "group-algebra") return build_group_algebra(group);
  throw ConfigError("unknown builtin bialgebra \"" + builtin + "\" (function-algebra, group-algebra)");
}

Index character_argument(const std::string& s, const CounitalBialgebra& b) {
  const Index k = std::stol(s.substr(s.find(':') + 1));
  if (k < 0 || k >= static_cast<Index>(b.characters.size()))
    throw ConfigError("character index " + std::to_string(k) + " out of range");
  return k;
}

std::vector<Matrix> parse_pi(const json& spec, const CounitalBialgebra& b) {
  std::vector<Matrix> pi;
  if (spec.is_string()) {
    const auto s = spec.get<std::string>();
    if (s == "regular") return b.rep;
    if (s.rfind("character:", 0) == 0) {
      const auto& chi = b.characters[static_cast<std::size_t>(character_argument(s, b))];
      for (Index i = 0; i < b.dim(); ++i) pi.push_back(Matrix::Constant(1, 1, chi(i)));
      return pi;
    }
    throw ConfigError("unknown representation \"" + s + "\" (regular, character:k)");
  }
  if (spec.is_object()) {
    const auto& blk = spec.at("faithful_block");
    const Index off = blk.at("offset").get<Index>(), size = blk.at("size").get<Index>();
    if (off < 0 || size <= 0 || off + size > b.rep_dim()) throw ConfigError("faithful_block out of range");
    for (const auto& r : b.rep) pi.push_back(r.block(off, off, size, size));
    return pi;
  }
  for (const auto& m : spec) pi.push_back(parse_matrix(m));
  if (static_cast<Index>(pi.size()) != b.dim()) throw ConfigError("pi needs one matrix per basis element");
  for (const auto& m : pi)
    if (m.rows() != pi.front().rows() || m.cols() != m.rows()) throw ConfigError("pi matrices must be square, same size");
  return pi;
}

void apply_tolerances(const json& spec, Tolerances& tol) {
  const std::pair<const char*, double*> keys[] = {
      {"axiom", &tol.axiom},           {"structure", &tol.structure},       {"round_trip", &tol.round_trip},
      {"identity", &tol.identity},     {"unitarity", &tol.unitarity},       {"vector_state", &tol.vector_state},
      {"compatibility", &tol.compatibility}, {"homomorphism", &tol.homomorphism}, {"positivity", &tol.positivity}};
  for (const auto& [key, slot] : keys)
    if (spec.contains(key)) *slot = parse_real(spec.at(key));
}

ExperimentConfig parse_config_impl(const json& doc, const fs::path& base) {
  ExperimentConfig c;
  c.name = doc.value("name", std::string("experiment"));
  c.bialgebra = parse_bialgebra_section(doc.at("bialgebra"), base);
  const auto& b = *c.bialgebra;

  c.character_index = doc.value("character", Index{0});
  if (c.character_index < 0 || c.character_index >= static_cast<Index>(b.characters.size()))
    throw ConfigError("character index out of range");
  c.chi = Character{{b.characters[static_cast<std::size_t>(c.character_index)]}};

  const auto& tr = doc.at("triple");
  c.triple.pi = parse_pi(tr.at("pi"), b);
  c.triple.xi = parse_vector(tr.at("xi"));
  if (c.triple.xi.size() != c.triple.pi.front().rows()) throw ConfigError("xi must have the dimension of pi");
  if (tr.contains("isometry")) {
    c.triple.isometry = parse_matrix(tr.at("isometry"));
    if (c.triple.isometry->rows() != c.triple.xi.size()) throw ConfigError("isometry must map into the space of pi");
  }

  c.horizon = doc.contains("horizon") ? parse_real(doc.at("horizon")) : 1.0;
  if (!(c.horizon > 0.0)) throw ConfigError("horizon must be positive");
  if (doc.contains("times"))
    for (const auto& t : doc.at("times")) c.times.push_back(parse_real(t));
  else
    c.times.push_back(c.horizon);
  for (double t : c.times)
    if (!(t > 0.0) || t > c.horizon) throw ConfigError("sample times must lie in (0, horizon]");

  if (doc.contains("h_sweep")) {
    const auto& s = doc.at("h_sweep");
    c.sweep.h0 = parse_real(s.at("h0"));
    c.sweep.ratio = s.contains("ratio") ? parse_real(s.at("ratio")) : 0.5;
    c.sweep.count = s.value("count", 6);
  }
  if (!(c.sweep.h0 > 0.0) || !(c.sweep.ratio > 0.0 && c.sweep.ratio < 1.0) || c.sweep.count < 1)
    throw ConfigError("h_sweep needs h0 > 0, 0 < ratio < 1 and count >= 1");
  const double n2 = c.triple.xi.squaredNorm();
  if (c.sweep.h0 * n2 > 1.0)
    throw ConfigError("h0 = " + fmt(c.sweep.h0) + " violates the step constraint h·|xi|^2 <= 1 (h0·|xi|^2 = " +
                      fmt(c.sweep.h0 * n2) + ")");

  const Index d = c.triple.noise_dim();
  const json probes = doc.value("probes", json::object());
  const json basis = probes.value("basis", json("all"));
  if (basis.is_string() && basis.get<std::string>() == "all") {
    for (Index i = 0; i < b.dim(); ++i) c.basis.push_back(i);
  } else {
    for (const auto& i : basis) {
      const auto k = i.get<Index>();
      if (k < 0 || k >= b.dim()) throw ConfigError("probe basis index out of range");
      c.basis.push_back(k);
    }
  }
  for (const auto& p : probes.value("pairs", json::array()))
    c.pairs.push_back({StepFunction::from_json(p.at("f"), d), StepFunction::from_json(p.at("g"), d)});
  if (c.pairs.empty())
    c.pairs.push_back({StepFunction::constant(Vector::Zero(d), c.horizon),
                       StepFunction::constant(Vector::Zero(d), c.horizon)});
  for (double h : c.sweep.values())
    for (const auto& p : c.pairs) {
      try {
        require_aligned(p.f, p.g, GridSpec::from_time(c.horizon, h));
      } catch (const DomainError& e) {
        throw ConfigError(std::string("probe step functions: ") + e.what());
      }
    }

  if (doc.contains("tolerances")) apply_tolerances(doc.at("tolerances"), c.tol);
  if (doc.contains("error_bound")) c.error_bound = parse_real(doc.at("error_bound"));
  c.compat_max_n = doc.value("compat_max_n", 3);
  Index dim = 1;
  for (int k = 0; k < c.compat_max_n; ++k) dim *= d + 1;
  if (c.compat_max_n < 0 || dim > kDefaultDimensionCap)
    throw ConfigError("compat_max_n exceeds the dimension cap of " + std::to_string(kDefaultDimensionCap));
  return c;
}

std::vector<double> tail_of(const std::vector<double>& v) {
  const std::size_t k = (v.size() + 1) / 2;
  return {v.end() - static_cast<std::ptrdiff_t>(k), v.end()};
}

std::optional<double> loglog_slope(const std::vector<double>& h, const std::vector<double>& y) {
  if (h.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (!(y[i] > 0.0) || !std::isfinite(y[i])) return std::nullopt;
    const double x = std::log10(h[i]), z = std::log10(y[i]);
    sx += x;
    sy += z;
    sxx += x * x;
    sxy += x * z;
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) return std::nullopt;
  return (n * sxy - sx * sy) / den;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

struct CheckList {
  VerifyReport report;
  void add(std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual, tol, residual <= tol});
  }
  void add(std::string name, double value, double tol, bool passed) {
    report.checks.push_back({std::move(name), value, tol, passed});
  }
};

/// Bialgebra axioms first, then the character and the triple.
void structural_checks(const ExperimentConfig& c, CheckList& out) {
  const auto& b = *c.bialgebra;
  const auto rep = verify_bialgebra(b);
  for (const auto& chk : rep.checks) out.add(chk.axiom, chk.residual, c.tol.axiom);
  out.add("faithfulness", rep.faithfulness, c.tol.axiom, rep.faithfulness > c.tol.axiom);
  if (!out.report.passed()) return;
  out.add("character", character_residual(b, c.chi), c.tol.axiom);
  const auto tr = check_triple(b, c.triple);
  out.add("triple_multiplicativity", tr.multiplicativity, c.tol.homomorphism);
  out.add("triple_involution", tr.involution, c.tol.homomorphism);
  out.add("triple_isometry", tr.isometry, c.tol.homomorphism);
}

json verify_document(const ExperimentConfig& c, const VerifyReport& r) {
  json doc = r.to_json();
  doc["command"] = "verify";
  doc["config"] = c.name;
  doc["bialgebra"] = c.bialgebra->name;
  return doc;
}

}  // namespace

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  double h = h0;
  for (int k = 0; k < count; ++k, h *= ratio) out.push_back(h);
  return out;
}

ExperimentConfig parse_config(const json& doc, const fs::path& base_dir) {
  try {
    return parse_config_impl(doc, base_dir);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
}

ExperimentConfig load_config(const fs::path& path) {
  json doc;
  try {
    doc = read_json_file(path.string());
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return parse_config(doc, path.parent_path());
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

json VerifyReport::to_json() const {
  json checks_json = json::array(), failed = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"passed", c.passed}});
    if (!c.passed) failed.push_back(c.name);
  }
  return {{"passed", passed()}, {"checks", checks_json}, {"failed", failed}};
}

VerifyReport run_verify(const ExperimentConfig& c) {
  CheckList out;
  structural_checks(c, out);
  if (!out.report.passed()) return out.report;

  const auto& b = c.bialgebra;
  const auto structure = structure_map_from_pair(b, c.triple, c.chi);
  out.add("structure_relation", verify_structure_relation(structure, c.chi), c.tol.structure);
  try {
    const auto ex = extract_implementing_pair(structure, c.chi);
    out.add("extraction_round_trip", ex.round_trip, c.tol.round_trip);
  } catch (const AxiomError& e) {
    log(LogLevel::info, e.what());
    out.add("extraction_round_trip", INFINITY, c.tol.round_trip);
  }

  const auto generator = build_generator(b, c.triple, c.chi);
  const auto cp = verify_cp_decomposition(generator, c.chi, default_zeta(c.triple), c.tol.positivity);
  out.add("cp_decomposition_min_eigenvalue", cp.phi1_min_eigenvalue, c.tol.positivity, cp.phi1_is_cp);
  out.add("generator_unit_max_eigenvalue", cp.phi_unit_max_eigenvalue, c.tol.positivity, cp.phitilde_one_negative);

  for (double h : c.sweep.values()) {
    const std::string at = "@h=" + fmt(h);
    const auto step = c.triple.isometry ? build_isometry(c.triple.xi, *c.triple.isometry, h)
                                        : build_unitary(c.triple.xi, h);
    out.add("step_isometry" + at, isometry_residual(step), c.tol.unitarity);
    out.add("error_identity" + at, verify_error_identity(b, c.triple, c.chi, h), c.tol.identity);
    out.add("vector_state" + at, vector_state_check(b, c.triple, c.chi, h), c.tol.vector_state);
    const auto props = walk_properties(build_walk(b, c.triple, c.chi, h));
    if (c.triple.isometry) {
      out.add("walk_choi_min_eigenvalue" + at, props.choi_min_eigenvalue, c.tol.positivity,
              props.choi_min_eigenvalue >= -c.tol.positivity);
      out.add("walk_unit" + at, props.unit, c.tol.homomorphism);
    } else {
      out.add("walk_multiplicativity" + at, props.multiplicativity, c.tol.homomorphism);
      out.add("walk_involution" + at, props.involution, c.tol.homomorphism);
    }
  }

  const auto psi = build_walk(b, c.triple, c.chi, c.sweep.h0);
  double compat = 0.0;
  for (int n = 1; n <= c.compat_max_n; ++n) compat = std::max(compat, check_compatibility(psi, n));
  out.add("compatibility", compat, c.tol.compatibility);
  return out.report;
}

std::optional<double> ErrorTable::tail_slope(double ErrorRow::*field) const {
  if (rows.size() < 3) return std::nullopt;
  std::vector<double> h, y;
  for (const auto& r : rows) {
    h.push_back(r.h);
    y.push_back(r.*field);
  }
  return loglog_slope(tail_of(h), tail_of(y));
}

std::optional<double> ErrorTable::full_slope(double ErrorRow::*field) const {
  if (rows.size() < 3) return std::nullopt;
  std::vector<double> h, y;
  for (const auto& r : rows) {
    h.push_back(r.h);
    y.push_back(r.*field);
  }
  return loglog_slope(h, y);
}

bool ErrorTable::tail_strictly_decreasing() const {
  const std::size_t start = rows.size() - (rows.size() + 1) / 2;
  for (std::size_t i = start + 1; i < rows.size(); ++i)
    if (!(rows[i].max_error < rows[i - 1].max_error)) return false;
  return true;
}

bool ErrorTable::strictly_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].max_error < rows[i - 1].max_error)) return false;
  return true;
}

std::string ErrorTable::csv() const {
  std::ostringstream os;
  os << "# schema: " << kCsvSchema << "\n";
  os << "h,n,generator_gap,gap_bound";
  for (const auto& p : probe_names) os << ",err[" << p << "]";
  os << ",max_error\n";
  for (const auto& r : rows) {
    os << fmt(r.h, "%.17g") << "," << r.n << "," << fmt(r.generator_gap, "%.12e") << ","
       << fmt(r.gap_bound, "%.12e");
    for (double e : r.errors) os << "," << fmt(e, "%.12e");
    os << "," << fmt(r.max_error, "%.12e") << "\n";
  }
  return os.str();
}

std::string ErrorTable::dat() const {
  std::ostringstream os;
  os << "# " << kCsvSchema << "\n# h n generator_gap gap_bound max_error\n";
  for (const auto& r : rows)
    os << fmt(r.h, "%.17g") << " " << r.n << " " << fmt(r.generator_gap, "%.12e") << " "
       << fmt(r.gap_bound, "%.12e") << " " << fmt(r.max_error, "%.12e") << "\n";
  return os.str();
}

ErrorTable run_sweep(const ExperimentConfig& c, bool parallel) {
  const auto& b = c.bialgebra;
  if ((c.chi.values - b->counit).cwiseAbs().maxCoeff() > 0.0)
    throw ConfigError("the convergence sweep needs the counit as character");

  const auto phi = build_generator(b, c.triple, c.chi);
  const CocycleReference reference(phi);
  const auto [phi1, phi2] = error_terms(b, c.triple, c.chi);
  const double norm1 = cb_norm_surrogate(phi1), norm2 = cb_norm_surrogate(phi2);

  ErrorTable table;
  std::vector<Functional> refs;
  for (std::size_t ti = 0; ti < c.times.size(); ++ti)
    for (std::size_t p = 0; p < c.pairs.size(); ++p) {
      refs.push_back(reference.matrix_elements(c.pairs[p].f, c.pairs[p].g, c.times[ti]));
      for (Index i : c.basis) {
        const auto& labels = b->labels;
        const std::string label = i < static_cast<Index>(labels.size()) ? labels[static_cast<std::size_t>(i)]
                                                                         : std::to_string(i);
        table.probe_names.push_back("t=" + fmt(c.times[ti]) + ";pair=" + std::to_string(p) + ";b=" + label);
      }
    }

  auto compute_row = [&](double h) {
    ErrorRow row;
    row.h = h;
    row.n = GridSpec::from_time(c.horizon, h).n;
    const auto psi = build_walk(b, c.triple, c.chi, h);
    row.generator_gap = generator_gap(phi, psi, c.chi, h);
    const double a = h / (1.0 + std::sqrt(1.0 - h * c.triple.xi.squaredNorm()));
    row.gap_bound = a * norm1 + a * a * norm2;
    std::size_t k = 0;
    for (double t : c.times)
      for (const auto& pair : c.pairs) {
        const auto walk = walk_functional(psi, pair.f, pair.g, t, h);
        for (Index i : c.basis) {
          const double e = std::abs(walk(i) - refs[k](i));
          row.errors.push_back(e);
          row.max_error = std::max(row.max_error, e);
        }
        ++k;
      }
    log(LogLevel::debug, "h = " + fmt(h) + ": max error " + fmt(row.max_error));
    return row;
  };

  const auto hs = c.sweep.values();
  if (parallel) {
    std::vector<std::future<ErrorRow>> jobs;
    for (double h : hs) jobs.push_back(std::async(std::launch::async, compute_row, h));
    for (auto& j : jobs) table.rows.push_back(j.get());
  } else {
    for (double h : hs) table.rows.push_back(compute_row(h));
  }
  return table;
}

SweepOutcome evaluate_sweep(const ExperimentConfig& c, ErrorTable table) {
  SweepOutcome out;
  const auto& rows = table.rows;
  const double first = rows.front().max_error, last = rows.back().max_error;
  out.passed = table.tail_strictly_decreasing() && last < c.error_bound;
  out.summary = {
      {"rows", rows.size()},
      {"tail_slope_max_error", optional_json(table.tail_slope(&ErrorRow::max_error))},
      {"tail_slope_generator_gap", optional_json(table.tail_slope(&ErrorRow::generator_gap))},
      {"slope_generator_gap", optional_json(table.full_slope(&ErrorRow::generator_gap))},
      {"tail_strictly_decreasing", table.tail_strictly_decreasing()},
      {"strictly_decreasing", table.strictly_decreasing()},
      {"initial_max_error", first},
      {"final_max_error", last},
      {"final_over_initial", first > 0.0 ? json(last / first) : json(nullptr)},
      {"error_bound", c.error_bound},
      {"passed", out.passed}};
  out.table = std::move(table);
  return out;
}

int cmd_verify(const fs::path& config_path, const fs::path& out_dir) {
  ExperimentConfig c;
  try {
    c = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  const auto report = run_verify(c);
  fs::create_directories(out_dir);
  write_json_file((out_dir / "report.json").string(), verify_document(c, report));
  for (const auto& chk : report.checks)
    if (!chk.passed) log(LogLevel::info, "FAILED " + chk.name + " (residual " + fmt(chk.residual) + ")");
  log(LogLevel::info, "verify " + c.name + ": " + (report.passed() ? "passed" : "failed"));
  return report.passed() ? 0 : 1;
}

int cmd_sweep(const fs::path& config_path, const fs::path& out_dir) {
  ExperimentConfig c;
  try {
    c = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  fs::create_directories(out_dir);
  CheckList pre;
  structural_checks(c, pre);
  if (!pre.report.passed()) {
    json doc = verify_document(c, pre.report);
    doc["command"] = "sweep";
    write_json_file((out_dir / "report.json").string(), doc);
    log(LogLevel::info, "sweep " + c.name + ": structural checks failed");
    return 1;
  }
  SweepOutcome outcome;
  try {
    outcome = evaluate_sweep(c, run_sweep(c));
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  write_text(out_dir / "errors.csv", outcome.table.csv());
  write_text(out_dir / "errors.dat", outcome.table.dat());
  json doc = {{"command", "sweep"}, {"config", c.name}, {"bialgebra", c.bialgebra->name},
              {"summary", outcome.summary}, {"passed", outcome.passed}};
  write_json_file((out_dir / "report.json").string(), doc);
  log(LogLevel::info, "sweep " + c.name + ": final max error " + fmt(outcome.table.rows.back().max_error) + ", " +
                          (outcome.passed ? "passed" : "failed"));
  return outcome.passed ? 0 : 1;
}

std::vector<std::string> demo_names() { return {"c-z2", "group-z2", "group-s3", "custom-file"}; }

std::optional<json> demo_config(const std::string& name) {
  const json a = {0.5, 0.2}, c = {-0.3, 0.4}, d = {0.7, 0.0}, e = {0.1, -0.6};
  const json pairs_d1 = json::array({
      {{"f", {{1.0, {a}}}}, {"g", {{1.0, {c}}}}},
      {{"f", {{0.25, {a}}, {0.5, {d}}, {0.25, {c}}}}, {"g", {{0.5, {e}}, {0.5, {a}}}}},
  });
  json doc = {{"name", name},
              {"character", 0},
              {"horizon", 1.0},
              {"times", {0.5, 1.0}},
              {"h_sweep", {{"h0", 0.25}, {"ratio", 0.5}, {"count", 6}}},
              {"probes", {{"basis", "all"}, {"pairs", pairs_d1}}},
              {"error_bound", 1e-2},
              {"compat_max_n", 4}};
  if (name == "c-z2") {
    doc["bialgebra"] = {{"builtin", "function-algebra"}, {"group", "cyclic:2"}};
    doc["triple"] = {{"pi", "character:1"}, {"xi", {{0.8, 0.0}}}};
  } else if (name == "group-z2") {
    doc["bialgebra"] = {{"builtin", "group-algebra"}, {"group", "cyclic:2"}};
    doc["triple"] = {{"pi", "character:1"}, {"xi", {{0.8, 0.0}}}};
  } else if (name == "group-s3") {
    json e0 = json::array();
    for (int i = 0; i < 6; ++i) e0.push_back({{i == 0 ? 1.0 : 0.0, 0.0}});
    doc["bialgebra"] = {{"builtin", "group-algebra"}, {"group", "symmetric:3"}};
    doc["triple"] = {{"pi", "regular"},
                     {"xi", {{0.3, 0.0}, {-0.2, 0.1}, {0.25, 0.0}, {0.1, -0.3}, {-0.15, 0.0}, {0.0, 0.2}}},
                     {"isometry", e0}};
  } else if (name == "custom-file") {
    doc["bialgebra"] = {{"file", "kac_paljutkin.json"}};
    doc["triple"] = {{"pi", {{"faithful_block", {{"offset", 4}, {"size", 2}}}}},
                     {"xi", {{0.6, 0.0}, {0.3, -0.4}}},
                     {"isometry", {{{0.6, 0.0}}, {{0.0, 0.8}}}}};
  } else {
    return std::nullopt;
  }
  return doc;
}

int cmd_demo(const std::string& name, const fs::path& out_dir) {
  const auto doc = demo_config(name);
  if (!doc) {
    std::cerr << "unknown demo \"" << name << "\"; available demos:";
    for (const auto& n : demo_names()) std::cerr << " " << n;
    std::cerr << "\n";
    return 2;
  }
  fs::create_directories(out_dir);
  if (name == "custom-file")
    fs::copy_file(fs::path(QRW_DATA_DIR) / "kac_paljutkin.json", out_dir / "kac_paljutkin.json",
                  fs::copy_options::overwrite_existing);
  const auto config_path = out_dir / "config.json";
  write_json_file(config_path.string(), *doc);
  const int verify = cmd_verify(config_path, out_dir / "verify");
  const int sweep = cmd_sweep(config_path, out_dir / "sweep");
  return std::max(verify, sweep);
}

}  // namespace qrw

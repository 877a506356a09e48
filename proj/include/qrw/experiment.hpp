#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrw/cocycle.hpp"
#include "qrw/fock.hpp"
#include "qrw/qsmaps.hpp"

namespace qrw {

/// Invalid or inconsistent experiment configuration (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  double h0 = 0.25;
  double ratio = 0.5;
  int count = 6;
  /// h0, h0·ratio, ..., decreasing.
  std::vector<double> values() const;
};

struct ProbePair {
  StepFunction f;
  StepFunction g;
};

struct Tolerances {
  double axiom = 1e-12;
  double structure = 1e-12;
  double round_trip = 1e-10;
  double identity = 1e-11;
  double unitarity = 1e-13;
  double vector_state = 1e-12;
  double compatibility = 1e-11;
  double homomorphism = 1e-12;
  double positivity = 1e-10;
};

struct ExperimentConfig {
  std::string name;
  BialgebraPtr bialgebra;
  Index character_index = 0;
  Character chi;
  ImplementingTriple triple;
  double horizon = 1.0;
  std::vector<double> times;
  SweepSpec sweep;
  std::vector<Index> basis;
  std::vector<ProbePair> pairs;
  Tolerances tol;
  double error_bound = 1e-2;
  int compat_max_n = 3;
};

/// Relative file paths are resolved against `base_dir`. Throws ConfigError.
/// The bialgebra is parsed but not verified; axiom failures surface in cmd_verify.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

VerifyReport run_verify(const ExperimentConfig& config);

struct ErrorRow {
  double h = 0.0;
  int n = 0;
  double generator_gap = 0.0;
  /// (h/(1+c))‖φ₁‖ + (h/(1+c))²‖φ₂‖ with surrogate norms.
  double gap_bound = 0.0;
  /// One entry per probe, in ErrorTable::probe_names order.
  std::vector<double> errors;
  double max_error = 0.0;
};

struct ErrorTable {
  std::vector<std::string> probe_names;
  /// Sorted by h descending.
  std::vector<ErrorRow> rows;

  /// Least-squares slope of log10(y) on log10(h) over the last ⌈rows/2⌉ rows;
  /// empty with fewer than 3 rows or a nonpositive value.
  std::optional<double> tail_slope(double ErrorRow::*field) const;
  /// Same fit over all rows.
  std::optional<double> full_slope(double ErrorRow::*field) const;
  bool tail_strictly_decreasing() const;
  bool strictly_decreasing() const;
  std::string csv() const;
  std::string dat() const;
};

inline constexpr const char* kCsvSchema = "qrwlab-errors/1";

ErrorTable run_sweep(const ExperimentConfig& config, bool parallel = true);

struct SweepOutcome {
  ErrorTable table;
  bool passed = false;
  nlohmann::json summary;
};

/// Passed iff the max error is strictly decreasing over the tail of the sweep
/// and the final max error is below the configured bound.
SweepOutcome evaluate_sweep(const ExperimentConfig& config, ErrorTable table);

/// Exit codes: 0 success, 1 failed checks (report still written), 2 config error.
int cmd_verify(const std::filesystem::path& config_path, const std::filesystem::path& out_dir);
int cmd_sweep(const std::filesystem::path& config_path, const std::filesystem::path& out_dir);
int cmd_demo(const std::string& name, const std::filesystem::path& out_dir);

std::vector<std::string> demo_names();
/// Ready-made config for a demo; nullopt for unknown names. The custom-file
/// demo expects kac_paljutkin.json next to the written config.
std::optional<nlohmann::json> demo_config(const std::string& name);

}  // namespace qrw

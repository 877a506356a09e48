#include "qrw/fock.hpp"

#include <algorithm>
#include <cmath>

#include "qrw/convolution.hpp"
#include "qrw/errors.hpp"
#include "qrw/json_io.hpp"

namespace qrw {

StepFunction::StepFunction(Index noise_dim, std::vector<Segment> segments)
    : noise_dim_(noise_dim), segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (!(s.duration > 0.0)) throw DomainError("step function durations must be positive");
    if (s.value.size() != noise_dim_) throw DimensionError("step function value has wrong dimension");
  }
}

StepFunction StepFunction::constant(const Vector& value, double duration) {
  return StepFunction(value.size(), {{duration, value}});
}

StepFunction StepFunction::from_json(const nlohmann::json& doc, Index noise_dim) {
  if (!doc.is_array()) throw ParseError("step function must be a list of [duration, value] rows");
  std::vector<Segment> segments;
  for (const auto& row : doc) {
    if (!row.is_array() || row.size() != 2) throw ParseError("step function row must be [duration, value]");
    const double duration = parse_real(row[0]);
    Vector value;
    // For d = 1 a bare number or a single [re, im] pair is the value itself.
    const bool scalar = noise_dim == 1 && (!row[1].is_array() || (row[1].size() == 2 && !row[1][0].is_array()));
    if (scalar) {
      value = Vector::Constant(1, parse_complex(row[1]));
    } else if (row[1].is_array()) {
      value = parse_vector(row[1]);
    } else {
      throw ParseError("step function value must be a list of complex entries");
    }
    segments.push_back({duration, value});
  }
  return StepFunction(noise_dim, std::move(segments));
}

nlohmann::json StepFunction::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : segments_) out.push_back(nlohmann::json::array({s.duration, qrw::to_json(s.value)}));
  return out;
}

double StepFunction::total_time() const {
  double t = 0.0;
  for (const auto& s : segments_) t += s.duration;
  return t;
}

std::vector<double> StepFunction::breakpoints() const {
  std::vector<double> out;
  double t = 0.0;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    t += segments_[i].duration;
    out.push_back(t);
  }
  return out;
}

Vector StepFunction::value_at(double t) const {
  double start = 0.0;
  for (const auto& s : segments_) {
    if (t >= start && t < start + s.duration) return s.value;
    start += s.duration;
  }
  return Vector::Zero(noise_dim_);
}

Vector StepFunction::integral(double a, double b) const {
  Vector out = Vector::Zero(noise_dim_);
  double start = 0.0;
  for (const auto& s : segments_) {
    const double lo = std::max(a, start);
    const double hi = std::min(b, start + s.duration);
    if (hi > lo) out += (hi - lo) * s.value;
    start += s.duration;
  }
  return out;
}

Complex inner_integral(const StepFunction& f, const StepFunction& g, double a, double b) {
  if (f.noise_dim() != g.noise_dim()) throw DimensionError("step functions have different noise dimensions");
  std::vector<double> cuts{a, b};
  for (double x : f.breakpoints()) cuts.push_back(x);
  for (double x : g.breakpoints()) cuts.push_back(x);
  cuts.push_back(f.total_time());
  cuts.push_back(g.total_time());
  std::sort(cuts.begin(), cuts.end());
  Complex out{};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = std::max(a, cuts[i]);
    const double hi = std::min(b, cuts[i + 1]);
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    out += (hi - lo) * f.value_at(mid).dot(g.value_at(mid));
  }
  return out;
}

Complex exponential_overlap(const StepFunction& f, const StepFunction& g, double from) {
  const double end = std::max({f.total_time(), g.total_time(), from});
  return std::exp(inner_integral(f, g, from, end));
}

GridSpec GridSpec::from_time(double t, double h) {
  if (!(h > 0.0)) throw DomainError("grid step h must be positive");
  if (t < 0.0) throw DomainError("time must be nonnegative");
  const double ratio = t / h;
  const double nearest = std::round(ratio);
  const double n = std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio) ? nearest : std::floor(ratio);
  return {h, static_cast<int>(n)};
}

Vector cell_vector(const StepFunction& f, const GridSpec& grid, int cell) {
  if (cell < 0 || cell >= grid.n) throw DomainError("cell index out of range");
  Vector v(f.noise_dim() + 1);
  v(0) = 1.0;
  v.tail(f.noise_dim()) = f.integral(cell * grid.h, (cell + 1) * grid.h) / std::sqrt(grid.h);
  return v;
}

Complex embed_vector(const Vector& v, const GridSpec& grid, int cell, const StepFunction& f) {
  if (v.size() != f.noise_dim() + 1) throw DimensionError("embed_vector: v must live in ℂ ⊕ ℂ^d");
  return v.dot(cell_vector(f, grid, cell));
}

void require_aligned(const StepFunction& f, const StepFunction& g, const GridSpec& grid) {
  auto check = [&](const StepFunction& s) {
    for (double x : s.breakpoints()) {
      if (x >= grid.horizon()) continue;
      const double r = x / grid.h;
      if (std::abs(r - std::round(r)) > 1e-9 * std::max(1.0, r))
        throw DomainError("step function breakpoint " + std::to_string(x) + " is not on the grid of step " +
                          std::to_string(grid.h));
    }
  };
  check(f);
  check(g);
}

Complex toy_matrix_element(const Matrix& a, const StepFunction& f, const StepFunction& g, const GridSpec& grid) {
  if (f.noise_dim() != g.noise_dim()) throw DimensionError("step functions have different noise dimensions");
  Index dim = 1;
  for (int j = 0; j < grid.n; ++j) dim *= f.noise_dim() + 1;
  if (a.rows() != dim || a.cols() != dim) throw DimensionError("operator size does not match (d+1)^n");
  require_aligned(f, g, grid);
  Vector u = Vector::Ones(1), v = Vector::Ones(1);
  for (int j = 0; j < grid.n; ++j) {
    u = kron(u, cell_vector(f, grid, j));
    v = kron(v, cell_vector(g, grid, j));
  }
  return u.dot(a * v) * exponential_overlap(f, g, grid.horizon());
}

Functional vector_functional(const OperatorMap& psi, const Vector& u, const Vector& v) {
  RowVector r(psi.source_dim());
  for (Index i = 0; i < psi.source_dim(); ++i) r(i) = u.dot(psi[i] * v);
  return {r};
}

Functional walk_functional(const OperatorMap& psi, const StepFunction& f, const StepFunction& g, double t,
                           double h) {
  if (psi.target_dim() != f.noise_dim() + 1 || f.noise_dim() != g.noise_dim())
    throw DimensionError("walk map and step functions disagree on the noise dimension");
  const auto grid = GridSpec::from_time(t, h);
  require_aligned(f, g, grid);
  const auto& b = psi.source();
  Functional acc{b.counit};
  for (int j = 0; j < grid.n; ++j)
    acc = convolve(b, acc, vector_functional(psi, cell_vector(f, grid, j), cell_vector(g, grid, j)));
  acc.values *= exponential_overlap(f, g, grid.horizon());
  return acc;
}

Complex walk_matrix_element(const OperatorMap& psi, Index b, const StepFunction& f, const StepFunction& g, double t,
                            double h) {
  return walk_functional(psi, f, g, t, h)(b);
}

Complex walk_matrix_element_dense(const OperatorMap& psi, Index b, const StepFunction& f, const StepFunction& g,
                                  double t, double h) {
  const auto grid = GridSpec::from_time(t, h);
  const auto iterate = convolution_iterates(psi, grid.n);
  return toy_matrix_element(iterate[b], f, g, grid);
}

}  // namespace qrw

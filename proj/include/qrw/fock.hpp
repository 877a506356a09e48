#pragma once

#include <vector>

#include "json.hpp"
#include "qrw/operator_map.hpp"

namespace qrw {

/// Piecewise-constant function [0, total_time) -> ℂ^d, zero afterwards.
class StepFunction {
 public:
  struct Segment {
    double duration;
    Vector value;
  };

  StepFunction(Index noise_dim, std::vector<Segment> segments);
  static StepFunction constant(const Vector& value, double duration);

  /// Text form: [[duration, value], ...] with value a list of entries, each a
  /// number or [re, im]. When d = 1 the value may also be a single entry.
  static StepFunction from_json(const nlohmann::json& doc, Index noise_dim);
  nlohmann::json to_json() const;

  Index noise_dim() const { return noise_dim_; }
  double total_time() const;
  const std::vector<Segment>& segments() const { return segments_; }
  /// Interior segment boundaries, increasing.
  std::vector<double> breakpoints() const;
  Vector value_at(double t) const;
  /// ∫_a^b f(s) ds
  Vector integral(double a, double b) const;

 private:
  Index noise_dim_;
  std::vector<Segment> segments_;
};

/// ∫_a^b <f(s), g(s)> ds (exact for step functions).
Complex inner_integral(const StepFunction& f, const StepFunction& g, double a, double b);

/// <ε(f), ε(g)> restricted to [a, ∞) = exp ∫_a^∞ <f, g>.
Complex exponential_overlap(const StepFunction& f, const StepFunction& g, double from = 0.0);

/// Uniform partition of [0, n h) into cells [j h, (j+1) h).
struct GridSpec {
  double h;
  int n;

  double horizon() const { return h * n; }
  /// n = ⌊t/h⌋, with quotients within 1e-9 of an integer rounded to it.
  static GridSpec from_time(double t, double h);
};

/// <D_j v, ε(f)|cell j> = conj(z) + h^{-1/2} <c, ∫_cell f> for v = (z, c); cells are 0-based.
Complex embed_vector(const Vector& v, const GridSpec& grid, int cell, const StepFunction& f);

/// D_j^* ε(f)|cell j = (1, h^{-1/2} ∫_cell f) ∈ ℂ ⊕ ℂ^d.
Vector cell_vector(const StepFunction& f, const GridSpec& grid, int cell);

/// Throws DomainError unless every breakpoint of f and g inside (0, nh) lies
/// on the grid (relative tolerance 1e-9).
void require_aligned(const StepFunction& f, const StepFunction& g, const GridSpec& grid);

/// <ε(f), (D A D^* ⊗ I) ε(g)> for A acting on (ℂ ⊕ ℂ^d)^{⊗n}, cell 0 the leftmost factor.
Complex toy_matrix_element(const Matrix& a, const StepFunction& f, const StepFunction& g, const GridSpec& grid);

/// b ↦ <u, ψ(b) v>.
Functional vector_functional(const OperatorMap& psi, const Vector& u, const Vector& v);

/// b ↦ <ε(f), Θ_n(ψ^{⋆n}(b)) ε(g)> with n = ⌊t/h⌋, for every basis element at once.
///
/// Computed as the ordered convolution of the per-cell functionals
/// b ↦ <D_j^*ε(f), ψ(b) D_j^*ε(g)>, times the tail overlap beyond nh; the tensor
/// power (d+1)^n is never formed.
Functional walk_functional(const OperatorMap& psi, const StepFunction& f, const StepFunction& g, double t, double h);

Complex walk_matrix_element(const OperatorMap& psi, Index b, const StepFunction& f, const StepFunction& g, double t,
                            double h);

/// Same value through the explicit operator ψ^{⋆n}(b); limited by the dimension cap.
Complex walk_matrix_element_dense(const OperatorMap& psi, Index b, const StepFunction& f, const StepFunction& g,
                                  double t, double h);

}  // namespace qrw

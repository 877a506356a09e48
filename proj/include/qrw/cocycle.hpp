#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "qrw/convolution.hpp"
#include "qrw/fock.hpp"
#include "qrw/qsmaps.hpp"

namespace qrw {

/// φ_{c,d}(b) = <ĉ, φ(b) d̂> + <c, d> ε(b).
Functional assoc_generator(const OperatorMap& phi, const Vector& c, const Vector& d);

/// Matrix elements of the limit cocycle between exponential vectors of step
/// functions, through the associated semigroups λ^{c,d}_s = exp_⋆(s φ_{c,d}).
///
/// Semigroup generators are cached per (c, d). Lookups take a shared lock;
/// insertion takes the exclusive lock, so one instance may serve several
/// threads.
class CocycleReference {
 public:
  explicit CocycleReference(OperatorMap phi);

  const OperatorMap& generator() const { return phi_; }

  /// λ^{c,d}_s on every basis element.
  Functional semigroup(const Vector& c, const Vector& d, double s) const;

  /// b ↦ <ε(f), l_t(b) ε(g)> for every basis element. The interval [0, t) is
  /// cut at the common refinement of f and g; the per-interval semigroups are
  /// multiplied in time order and the result carries the tail factor
  /// exp ∫_t^∞ <f, g>. Throws DomainError if t exceeds both supports.
  Functional matrix_elements(const StepFunction& f, const StepFunction& g, double t) const;
  Complex matrix_element(Index b, const StepFunction& f, const StepFunction& g, double t) const;

  std::size_t cache_size() const;

 private:
  std::shared_ptr<const ConvolutionSemigroup> semigroup_for(const Vector& c, const Vector& d) const;

  OperatorMap phi_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::vector<double>, std::shared_ptr<const ConvolutionSemigroup>> cache_;
};

Complex cocycle_matrix_element(const OperatorMap& phi, Index b, const StepFunction& f, const StepFunction& g,
                               double t);

struct CrossValidationRow {
  double h = 0.0;
  int n = 0;
  Complex reference;
  Complex walk;
  double error = 0.0;
};

/// Reference and walk functionals (all basis elements) for one step h.
struct FunctionalComparison {
  double h = 0.0;
  int n = 0;
  Functional reference;
  Functional walk;
  double max_error() const;
};

/// For each h: the walk ψ^(h) built from the triple against the cocycle of φ.
/// Requires χ = ε and φ equal to the generator of the triple (residual < 1e-10);
/// throws DomainError otherwise. Results are sorted by h descending.
std::vector<FunctionalComparison> compare_with_walk(const CocycleReference& reference, BialgebraPtr b,
                                                    const ImplementingTriple& triple, const StepFunction& f,
                                                    const StepFunction& g, double t, std::vector<double> h_list);

std::vector<CrossValidationRow> cross_validate_against_walk(const OperatorMap& phi, const ImplementingTriple& triple,
                                                            Index b, const StepFunction& f, const StepFunction& g,
                                                            double t, std::vector<double> h_list);

}  // namespace qrw

#pragma once

#include <utility>

#include "qrw/qsmaps.hpp"

namespace qrw {

/// One discrete step of the walk for a vector ξ and step length h.
///
/// `op` is the unitary U on ℂ ⊕ ℂ^p, or the isometry V = U·diag(1, D) from
/// ℂ ⊕ ℂ^d into ℂ ⊕ ℂ^p.
struct WalkStep {
  double h = 0.0;
  /// c_h = sqrt(1 − h‖ξ‖²)
  double c = 1.0;
  /// s_h = h^{1/2} ξ
  Vector s;
  /// d_h = c_h − 1
  double d = 0.0;
  /// Projection onto span{ξ}; zero when ξ = 0.
  Matrix q;
  Matrix op;
};

/// U = [[c, −s*], [s, cQ + Q⊥]]. Throws DomainError unless h > 0 and h‖ξ‖² <= 1.
WalkStep build_unitary(const Vector& xi, double h);

/// V = U·diag(1, D).
WalkStep build_isometry(const Vector& xi, const Matrix& isometry, double h);

/// ρ^(h)(b) = U^*(χ(b) ⊕ π(b))U. The isometry of the triple is ignored.
OperatorMap build_walk_rep(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h);

/// ψ^(h)(b) = V^*(χ(b) ⊕ π(b))V. Requires an isometry.
OperatorMap build_walk_cp(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h);

/// Homomorphic walk without D, CP walk with D.
OperatorMap build_walk(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h);

/// The generator matching build_walk: structure map without D, CP generator with D.
OperatorMap build_generator(BialgebraPtr b, const ImplementingTriple& t, const Character& chi);

/// The h-independent maps (φ₁, φ₂) of the error expansion
///   φ − cD_h∘(ψ^(h) − χ(·)I) = h/(1+c_h) φ₁ − h²/(1+c_h)² φ₂.
std::pair<OperatorMap, OperatorMap> error_terms(BialgebraPtr b, const ImplementingTriple& t, const Character& chi);

/// Max operator-norm difference between the two sides of the error expansion.
double verify_error_identity(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h);

/// |<e0, ρ(b)e0> − <Ω, (χ⊕π)(b)Ω>| + |<e0, ρ(b)e0> − (χ + hγ)(b)| maximised over
/// the basis, with Ω = U e0.
double vector_state_check(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h);

struct WalkProperties {
  /// max ‖ψ(b_i b_j) − ψ(b_i)ψ(b_j)‖
  double multiplicativity = 0.0;
  /// max ‖ψ(b_i^*) − ψ(b_i)^*‖
  double involution = 0.0;
  /// ‖ψ(1) − I‖
  double unit = 0.0;
  /// Smallest eigenvalue of [ψ(b_i^* b_j)]_ij.
  double choi_min_eigenvalue = 0.0;
};

WalkProperties walk_properties(const OperatorMap& psi);

/// ‖W^*W − I‖ for the step operator.
double isometry_residual(const WalkStep& step);

/// Largest h with h‖ξ‖² <= 1 (infinity for ξ = 0).
double max_step(const Vector& xi);

}  // namespace qrw

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qrw/operator_map.hpp"

namespace qrw {

/// Implementing data (π, ξ, D) for structure maps and CP generators.
///
/// π is a *-representation of B on ℂ^p with ξ ∈ ℂ^p. The optional D is an
/// isometry ℂ^d -> ℂ^p. Without D the noise space is ℂ^p itself.
struct ImplementingTriple {
  std::vector<Matrix> pi;
  Vector xi;
  std::optional<Matrix> isometry;

  Index space_dim() const { return xi.size(); }
  Index noise_dim() const { return isometry ? isometry->cols() : space_dim(); }
  HatSpace hat() const { return {noise_dim()}; }
  /// η = D^*ξ, or ξ when D is absent.
  Vector eta() const { return isometry ? Vector(isometry->adjoint() * xi) : xi; }
  /// ν = π − χ(·)I.
  std::vector<Matrix> nu(const Character& chi) const;
};

struct TripleReport {
  double multiplicativity = 0.0;
  double involution = 0.0;
  /// ‖π(1) − I‖; zero iff π is unital (nondegenerate).
  double unitality = 0.0;
  /// ‖D^*D − I‖ (0 when D is absent).
  double isometry = 0.0;
};

TripleReport check_triple(const CounitalBialgebra& b, const ImplementingTriple& t);

/// Throws DomainError if π is not a *-homomorphism or D is not an isometry.
void require_valid_triple(const CounitalBialgebra& b, const ImplementingTriple& t, double tol = 1e-12);

/// Largest residual of the character axioms.
double character_residual(const CounitalBialgebra& b, const Character& chi);

/// φ(a) = [[γ(a), <ξ|ν(a)], [ν(a)|ξ>, ν(a)]] with ν = π − χ(·)I, γ = <ξ, ν(·)ξ>.
/// The isometry, if any, is ignored.
OperatorMap structure_map_from_pair(BialgebraPtr b, const ImplementingTriple& t, const Character& chi);

/// max over basis pairs of ‖φ(a*b) − φ(a)*χ(b) − conj(χ(a))φ(b) − φ(a)*Δφ(b)‖.
double verify_structure_relation(const OperatorMap& phi, const Character& chi);

struct ExtractionResult {
  ImplementingTriple triple;
  /// Dimension of the kernel of the stacked ν system; ξ is the minimum-norm solution.
  Index kernel_dim = 0;
  bool underdetermined() const { return kernel_dim > 0; }
  double round_trip = 0.0;
};

/// Recover (π, ξ) from a χ-structure map. Throws AxiomError("not a χ-structure
/// map: ...") naming the first failed consistency check.
ExtractionResult extract_implementing_pair(const OperatorMap& phi, const Character& chi, double tol = 1e-10);

/// φ(a) = [<ξ| ; D^*] ν(a) [|ξ>, D] on ℂ ⊕ ℂ^d.
OperatorMap cp_generator_from_triple(BialgebraPtr b, const ImplementingTriple& t, const Character& chi);

/// ζ = (‖ξ‖²/2, D^*ξ), for which φ + χ(·)(Δ + |ζ><e0| + |e0><ζ|) = [ξ, D]^* π(·) [ξ, D].
Vector default_zeta(const ImplementingTriple& t);

struct CpDecompositionReport {
  /// Smallest eigenvalue of the block matrix [φ₁(b_i^* b_j)].
  double phi1_min_eigenvalue = 0.0;
  /// Largest eigenvalue of φ(1).
  double phi_unit_max_eigenvalue = 0.0;
  bool phi1_is_cp = false;
  bool phitilde_one_negative = false;
  bool passed() const { return phi1_is_cp && phitilde_one_negative; }
};

/// Checks φ = φ₁ − φ₂ with φ₂ = χ(·)(Δ + |ζ><e0| + |e0><ζ|) and φ₁ completely
/// positive, and φ(1) <= 0.
CpDecompositionReport verify_cp_decomposition(const OperatorMap& phi, const Character& chi, const Vector& zeta,
                                              double tol = 1e-10);

/// [φ(b_i^* b_j)]_ij, an n(d+1) x n(d+1) matrix; PSD iff φ is completely positive.
Matrix cp_block_matrix(const OperatorMap& phi);

/// D_h X D_h with D_h = diag(h^{-1/2}, I).
Matrix scaling_conjugation(const Matrix& x, double h);
OperatorMap scaling_conjugation(const OperatorMap& phi, double h);

/// Upper bound for the cb norm of φ, with B normed through its faithful
/// representation.
///
/// φ is extended to the full matrix algebra through the trace-preserving
/// conditional expectation onto the represented algebra (which leaves the cb
/// norm unchanged). For the Choi matrix C of the extension the Haagerup bound
/// ‖Tr₁|C*|‖^{1/2} ‖Tr₁|C|‖^{1/2} is returned. It equals ‖φ(1)‖ for CP maps.
double cb_norm_surrogate(const OperatorMap& phi);

/// Lower bound for ‖φ ⊗ id_k‖ sampled over random X ∈ M_k(B) plus the basis
/// elements themselves. Fixed-seed and deterministic.
double cb_norm_sampled(const OperatorMap& phi, Index k, int samples, std::uint64_t seed = 20240611);

/// φ − cD_h ∘ (ψ − χ(·)I).
OperatorMap generator_difference(const OperatorMap& phi, const OperatorMap& psi, const Character& chi, double h);

/// cb_norm_surrogate(generator_difference(φ, ψ, χ, h)).
double generator_gap(const OperatorMap& phi, const OperatorMap& psi, const Character& chi, double h);

}  // namespace qrw

#pragma once

#include <vector>

#include "qrw/operator_map.hpp"

namespace qrw {

inline constexpr Index kDefaultDimensionCap = 4096;

/// (f ⋆ g)(b_i) = Σ_jk Δ_i^jk f(b_j) ⊗ g(b_k).
OperatorMap convolve(const OperatorMap& f, const OperatorMap& g);

/// (f ⋆ g)(b_i) = Σ_jk Δ_i^jk f(b_j) g(b_k) for scalar-valued maps.
Functional convolve(const CounitalBialgebra& b, const Functional& f, const Functional& g);

/// Matrix-product convolution Σ_jk Δ_i^jk f(b_j) g(b_k), for maps into the same
/// operator algebra.
OperatorMap convolve_multiplicative(const OperatorMap& f, const OperatorMap& g);

/// ψ^{⋆0} = ε, ψ^{⋆n} = ψ^{⋆(n−1)} ⋆ ψ. Throws DimensionError when the target
/// dimension would exceed `cap`.
OperatorMap convolution_iterates(const OperatorMap& psi, int n, Index cap = kDefaultDimensionCap);

/// A map B -> B ⊗ M_N, stored as Ψ(b_i) = Σ_j b_j ⊗ block(i, j).
class LiftedMap {
 public:
  LiftedMap(BialgebraPtr source, Index target_dim, std::vector<Matrix> blocks);

  /// id_B (target M_1).
  static LiftedMap identity(BialgebraPtr source);

  const CounitalBialgebra& source() const { return *source_; }
  const BialgebraPtr& source_ptr() const { return source_; }
  Index target_dim() const { return target_dim_; }
  const Matrix& block(Index i, Index j) const { return blocks_[static_cast<std::size_t>(i * source_->dim() + j)]; }

  /// (ε ⊗ id) ∘ Ψ.
  OperatorMap counit_slice() const;

 private:
  BialgebraPtr source_;
  Index target_dim_;
  std::vector<Matrix> blocks_;
};

/// Ψ = (id ⊗ ψ) ∘ Δ.
LiftedMap lift(const OperatorMap& psi);

/// Ψ^{•0} = id, Ψ^{•n} = (Ψ^{•(n−1)} ⊗ id) ∘ Ψ.
LiftedMap composition_iterates(const LiftedMap& psi, int n, Index cap = kDefaultDimensionCap);

/// max over the basis of ‖(ε ⊗ id)(Ψ^{•n}(b)) − ψ^{⋆n}(b)‖ with Ψ = lift(ψ).
double check_compatibility(const OperatorMap& psi, int n, Index cap = kDefaultDimensionCap);

/// Convolution semigroup t ↦ exp_⋆(tψ) = (ε ⊗ id) ∘ exp(t T_ψ), where T_ψ acts on
/// coefficients in B ⊗ M_N by b_i ⊗ X ↦ Σ_jk Δ_i^jk b_j ⊗ ψ(b_k) X. The product
/// is the matrix-product convolution, so exp_⋆((s+t)ψ) = exp_⋆(sψ) ⊛ exp_⋆(tψ).
///
/// T_ψ is materialised once; evaluate() may be called for many t.
class ConvolutionSemigroup {
 public:
  explicit ConvolutionSemigroup(const OperatorMap& psi);
  ConvolutionSemigroup(const CounitalBialgebra& b, const Functional& psi);

  /// Operator-valued semigroup element (N x N per basis element).
  std::vector<Matrix> evaluate(double t) const;
  /// Scalar semigroup element; requires N = 1.
  Functional evaluate_functional(double t) const;
  const Matrix& generator_matrix() const { return transfer_; }

 private:
  void build(const CounitalBialgebra& b, const std::vector<Matrix>& psi);

  Index n_ = 0;
  Index target_dim_ = 1;
  RowVector counit_;
  Matrix transfer_;
};

OperatorMap convolution_exponential(const OperatorMap& psi, double t);
Functional convolution_exponential(const CounitalBialgebra& b, const Functional& psi, double t);

}  // namespace qrw

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qrw/group.hpp"
#include "qrw/linalg.hpp"

namespace qrw {

/// Dense complex rank-3 tensor, row-major in (i, j, k).
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(Index n0, Index n1, Index n2)
      : n0_(n0), n1_(n1), n2_(n2), data_(static_cast<std::size_t>(n0 * n1 * n2), Complex{}) {}

  Complex& operator()(Index i, Index j, Index k) { return data_[offset(i, j, k)]; }
  const Complex& operator()(Index i, Index j, Index k) const { return data_[offset(i, j, k)]; }

  Index extent(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : n2_; }
  const std::vector<Complex>& data() const { return data_; }

  /// Slice with the first index fixed, as an n1 x n2 matrix.
  Matrix slice(Index i) const;

 private:
  std::size_t offset(Index i, Index j, Index k) const {
    return static_cast<std::size_t>((i * n1_ + j) * n2_ + k);
  }
  Index n0_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Complex> data_;
};

/// A finite-dimensional counital C*-bialgebra in a chosen linear basis b_0..b_{n-1}.
///
/// Elements are coefficient vectors. Elements of B ⊗ B are n x n coefficient
/// matrices C with C(j, k) the coefficient of b_j ⊗ b_k.
struct CounitalBialgebra {
  std::string name;
  std::vector<std::string> labels;
  /// product(i, j, k): coefficient of b_k in b_i b_j.
  Tensor3 product;
  /// Column i holds the coefficients of b_i^*; a^* = involution * conj(a).
  Matrix involution;
  Vector unit;
  /// coproduct(i, j, k): Δ(b_i) = Σ_jk coproduct(i, j, k) b_j ⊗ b_k.
  Tensor3 coproduct;
  RowVector counit;
  /// Listed characters, each a row of values χ(b_i).
  std::vector<RowVector> characters;
  /// Faithful unital *-representation, one m x m matrix per basis element.
  std::vector<Matrix> rep;

  Index dim() const { return unit.size(); }
  Index rep_dim() const { return rep.empty() ? 0 : rep.front().rows(); }

  Vector basis(Index i) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector star(const Vector& a) const;
  /// Δ(a) as an n x n coefficient matrix.
  Matrix coproduct_of(const Vector& a) const;
  Matrix represent(const Vector& a) const;
  /// Coefficients of b_i^* b_j.
  Vector star_product(Index i, Index j) const;
  bool is_cocommutative(double tol = 1e-12) const;
};

using BialgebraPtr = std::shared_ptr<const CounitalBialgebra>;

/// C(G): basis of point masses δ_g, Δδ_g = Σ_{st=g} δ_s ⊗ δ_t, counit = evaluation at e.
BialgebraPtr build_function_algebra(const FiniteGroup& group);

/// ℂ[G]: basis λ_g, λ_g λ_h = λ_gh, λ_g^* = λ_{g^{-1}}, grouplike coproduct.
BialgebraPtr build_group_algebra(const FiniteGroup& group);

struct AxiomCheck {
  std::string axiom;
  double residual = 0.0;
  /// Basis indices at which the residual is attained (empty when zero).
  std::vector<Index> where;
};

struct BialgebraReport {
  std::vector<AxiomCheck> checks;
  /// Smallest singular value of the stacked representation matrices; > 0 iff faithful.
  double faithfulness = 0.0;
  bool cocommutative = false;

  double residual(const std::string& axiom) const;
  double max_residual() const;
  /// First check exceeding tol, or nullptr.
  const AxiomCheck* first_failure(double tol) const;
  bool passed(double tol) const { return first_failure(tol) == nullptr && faithfulness > tol; }
};

/// Exhaustive residuals for every bialgebra axiom. Never throws.
///
/// Check order: associativity, unit, involution, representation, coassociativity,
/// counit, coproduct_homomorphism, characters.
BialgebraReport verify_bialgebra(const CounitalBialgebra& b);

}  // namespace qrw

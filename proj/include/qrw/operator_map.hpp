#pragma once

#include <vector>

#include "qrw/bialgebra.hpp"
#include "qrw/linalg.hpp"

namespace qrw {

/// Hat space ℂ ⊕ ℂ^d. Coordinate 0 is the ℂ summand.
struct HatSpace {
  Index noise_dim = 0;

  Index dim() const { return noise_dim + 1; }
  Vector e0() const;
  /// ĉ = (1, c).
  Vector lift(const Vector& c) const;
  /// Projection onto the noise summand, diag(0, 1, ..., 1).
  Matrix noise_projection() const;
};

/// A linear functional on B, stored by its values on the basis.
struct Functional {
  RowVector values;

  Complex operator()(Index i) const { return values(i); }
  Complex apply(const Vector& a) const { return (values * a)(0); }
};

/// A character χ on B, i.e. a unital *-homomorphism into ℂ.
struct Character : Functional {
  static Character counit(const CounitalBialgebra& b) { return {{b.counit}}; }
};

/// Linear map from a bialgebra into operators on a finite-dimensional space,
/// stored by its values on the basis.
class OperatorMap {
 public:
  OperatorMap(BialgebraPtr source, std::vector<Matrix> values);

  /// χ(·) I_dim.
  static OperatorMap scalar(BialgebraPtr source, const Functional& f, Index dim);
  static OperatorMap zero(BialgebraPtr source, Index dim);
  /// 1 x 1 matrices carrying the functional's values.
  static OperatorMap from_functional(BialgebraPtr source, const Functional& f);

  const CounitalBialgebra& source() const { return *source_; }
  const BialgebraPtr& source_ptr() const { return source_; }
  Index source_dim() const { return static_cast<Index>(values_.size()); }
  Index target_dim() const { return values_.front().rows(); }

  const Matrix& operator[](Index i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& values() const { return values_; }
  Matrix evaluate(const Vector& a) const;
  Matrix at_unit() const { return evaluate(source_->unit); }
  /// Requires target_dim() == 1.
  Functional to_functional() const;

  /// V^* φ(·) V.
  OperatorMap compress(const Matrix& v) const;

  OperatorMap& operator+=(const OperatorMap& other);
  OperatorMap& operator-=(const OperatorMap& other);
  OperatorMap& operator*=(Complex s);

 private:
  BialgebraPtr source_;
  std::vector<Matrix> values_;
};

OperatorMap operator+(OperatorMap a, const OperatorMap& b);
OperatorMap operator-(OperatorMap a, const OperatorMap& b);
OperatorMap operator*(Complex s, OperatorMap a);

/// Largest operator-norm difference over the basis.
double max_difference(const OperatorMap& a, const OperatorMap& b);

/// Throws DimensionError unless both maps share a source and target size.
void require_same_shape(const OperatorMap& a, const OperatorMap& b);

}  // namespace qrw

#include "qrw/operator_map.hpp"

#include <algorithm>

#include "qrw/errors.hpp"

namespace qrw {

Vector HatSpace::e0() const {
  Vector v = Vector::Zero(dim());
  v(0) = 1.0;
  return v;
}

Vector HatSpace::lift(const Vector& c) const {
  if (c.size() != noise_dim) throw DimensionError("hat lift: vector has wrong dimension");
  Vector v(dim());
  v(0) = 1.0;
  v.tail(noise_dim) = c;
  return v;
}

Matrix HatSpace::noise_projection() const {
  Matrix p = Matrix::Identity(dim(), dim());
  p(0, 0) = 0.0;
  return p;
}

OperatorMap::OperatorMap(BialgebraPtr source, std::vector<Matrix> values)
    : source_(std::move(source)), values_(std::move(values)) {
  if (!source_) throw DimensionError("operator map needs a source bialgebra");
  if (static_cast<Index>(values_.size()) != source_->dim())
    throw DimensionError("operator map needs one matrix per basis element");
  for (const auto& m : values_)
    if (m.rows() != m.cols() || m.rows() != values_.front().rows())
      throw DimensionError("operator map values must be square and of equal size");
}

OperatorMap OperatorMap::scalar(BialgebraPtr source, const Functional& f, Index dim) {
  std::vector<Matrix> v;
  for (Index i = 0; i < source->dim(); ++i) v.push_back(f(i) * Matrix::Identity(dim, dim));
  return {std::move(source), std::move(v)};
}

OperatorMap OperatorMap::zero(BialgebraPtr source, Index dim) {
  std::vector<Matrix> v(static_cast<std::size_t>(source->dim()), Matrix::Zero(dim, dim));
  return {std::move(source), std::move(v)};
}

OperatorMap OperatorMap::from_functional(BialgebraPtr source, const Functional& f) {
  return scalar(std::move(source), f, 1);
}

Matrix OperatorMap::evaluate(const Vector& a) const {
  Matrix out = Matrix::Zero(target_dim(), target_dim());
  for (Index i = 0; i < source_dim(); ++i)
    if (a(i) != Complex{}) out += a(i) * values_[static_cast<std::size_t>(i)];
  return out;
}

Functional OperatorMap::to_functional() const {
  if (target_dim() != 1) throw DimensionError("to_functional needs a scalar-valued map");
  RowVector r(source_dim());
  for (Index i = 0; i < source_dim(); ++i) r(i) = values_[static_cast<std::size_t>(i)](0, 0);
  return {r};
}

OperatorMap OperatorMap::compress(const Matrix& v) const {
  if (v.rows() != target_dim()) throw DimensionError("compress: operator has wrong row count");
  std::vector<Matrix> out;
  for (const auto& m : values_) out.push_back(v.adjoint() * m * v);
  return {source_, std::move(out)};
}

void require_same_shape(const OperatorMap& a, const OperatorMap& b) {
  if (a.source_ptr() != b.source_ptr())
    throw DimensionError("operator maps have different sources");
  if (a.target_dim() != b.target_dim()) throw DimensionError("operator maps have different target sizes");
}

OperatorMap& OperatorMap::operator+=(const OperatorMap& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

OperatorMap& OperatorMap::operator-=(const OperatorMap& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

OperatorMap& OperatorMap::operator*=(Complex s) {
  for (auto& m : values_) m *= s;
  return *this;
}

OperatorMap operator+(OperatorMap a, const OperatorMap& b) { return a += b; }
OperatorMap operator-(OperatorMap a, const OperatorMap& b) { return a -= b; }
OperatorMap operator*(Complex s, OperatorMap a) { return a *= s; }

double max_difference(const OperatorMap& a, const OperatorMap& b) {
  require_same_shape(a, b);
  double r = 0.0;
  for (Index i = 0; i < a.source_dim(); ++i) r = std::max(r, op_norm(a[i] - b[i]));
  return r;
}

}  // namespace qrw

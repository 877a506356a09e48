#include "qrw/convolution.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "qrw/errors.hpp"

namespace qrw {

namespace {

void require_same_source(const OperatorMap& f, const OperatorMap& g) {
  if (f.source_ptr() != g.source_ptr()) throw DimensionError("convolution needs maps on the same bialgebra");
}

}  // namespace

OperatorMap convolve(const OperatorMap& f, const OperatorMap& g) {
  require_same_source(f, g);
  const auto& b = f.source();
  const Index n = b.dim();
  const Index dim = f.target_dim() * g.target_dim();
  std::vector<Matrix> out(static_cast<std::size_t>(n), Matrix::Zero(dim, dim));
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      bool used = false;
      for (Index i = 0; i < n && !used; ++i) used = b.coproduct(i, j, k) != Complex{};
      if (!used) continue;
      const Matrix fg = kron(f[j], g[k]);
      for (Index i = 0; i < n; ++i)
        if (b.coproduct(i, j, k) != Complex{}) out[static_cast<std::size_t>(i)] += b.coproduct(i, j, k) * fg;
    }
  return {f.source_ptr(), std::move(out)};
}

Functional convolve(const CounitalBialgebra& b, const Functional& f, const Functional& g) {
  const Index n = b.dim();
  RowVector out = RowVector::Zero(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (f(j) == Complex{}) continue;
      for (Index k = 0; k < n; ++k) out(i) += b.coproduct(i, j, k) * f(j) * g(k);
    }
  return {out};
}

OperatorMap convolve_multiplicative(const OperatorMap& f, const OperatorMap& g) {
  require_same_source(f, g);
  if (f.target_dim() != g.target_dim()) throw DimensionError("multiplicative convolution needs equal target sizes");
  const auto& b = f.source();
  const Index n = b.dim();
  std::vector<Matrix> out(static_cast<std::size_t>(n), Matrix::Zero(f.target_dim(), f.target_dim()));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (b.coproduct(i, j, k) != Complex{}) out[static_cast<std::size_t>(i)] += b.coproduct(i, j, k) * f[j] * g[k];
  return {f.source_ptr(), std::move(out)};
}

OperatorMap convolution_iterates(const OperatorMap& psi, int n, Index cap) {
  if (n < 0) throw DomainError("iterate count must be nonnegative");
  Index dim = 1;
  for (int k = 0; k < n; ++k) {
    dim *= psi.target_dim();
    if (dim > cap) throw DimensionError("convolution iterate exceeds the dimension cap of " + std::to_string(cap));
  }
  OperatorMap acc = OperatorMap::from_functional(psi.source_ptr(), Character::counit(psi.source()));
  for (int k = 0; k < n; ++k) acc = convolve(acc, psi);
  return acc;
}

LiftedMap::LiftedMap(BialgebraPtr source, Index target_dim, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_dim_(target_dim), blocks_(std::move(blocks)) {
  const Index n = source_->dim();
  if (static_cast<Index>(blocks_.size()) != n * n) throw DimensionError("lifted map needs n^2 blocks");
  for (const auto& m : blocks_)
    if (m.rows() != target_dim_ || m.cols() != target_dim_) throw DimensionError("lifted map block has wrong size");
}

LiftedMap LiftedMap::identity(BialgebraPtr source) {
  const Index n = source->dim();
  std::vector<Matrix> blocks(static_cast<std::size_t>(n * n), Matrix::Zero(1, 1));
  for (Index i = 0; i < n; ++i) blocks[static_cast<std::size_t>(i * n + i)](0, 0) = 1.0;
  return {std::move(source), 1, std::move(blocks)};
}

OperatorMap LiftedMap::counit_slice() const {
  const Index n = source_->dim();
  std::vector<Matrix> out;
  for (Index i = 0; i < n; ++i) {
    Matrix m = Matrix::Zero(target_dim_, target_dim_);
    for (Index j = 0; j < n; ++j) m += source_->counit(j) * block(i, j);
    out.push_back(std::move(m));
  }
  return {source_, std::move(out)};
}

LiftedMap lift(const OperatorMap& psi) {
  const auto& b = psi.source();
  const Index n = b.dim();
  std::vector<Matrix> blocks(static_cast<std::size_t>(n * n), Matrix::Zero(psi.target_dim(), psi.target_dim()));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (b.coproduct(i, j, k) != Complex{}) blocks[static_cast<std::size_t>(i * n + j)] += b.coproduct(i, j, k) * psi[k];
  return {psi.source_ptr(), psi.target_dim(), std::move(blocks)};
}

LiftedMap composition_iterates(const LiftedMap& psi, int n, Index cap) {
  if (n < 0) throw DomainError("iterate count must be nonnegative");
  const Index dim = psi.source().dim();
  LiftedMap acc = LiftedMap::identity(psi.source_ptr());
  for (int step = 0; step < n; ++step) {
    const Index next_dim = acc.target_dim() * psi.target_dim();
    if (next_dim > cap) throw DimensionError("composition iterate exceeds the dimension cap of " + std::to_string(cap));
    std::vector<Matrix> blocks(static_cast<std::size_t>(dim * dim), Matrix::Zero(next_dim, next_dim));
    // Ψ(b_i) = Σ_j b_j ⊗ M_ij, then Ψ^{•(k)} ⊗ id sends b_j to Σ_l b_l ⊗ P_jl.
    for (Index i = 0; i < dim; ++i)
      for (Index j = 0; j < dim; ++j) {
        const Matrix& mij = psi.block(i, j);
        if (mij.isZero(0.0)) continue;
        for (Index l = 0; l < dim; ++l) {
          const Matrix& pjl = acc.block(j, l);
          if (pjl.isZero(0.0)) continue;
          blocks[static_cast<std::size_t>(i * dim + l)] += kron(pjl, mij);
        }
      }
    acc = LiftedMap(psi.source_ptr(), next_dim, std::move(blocks));
  }
  return acc;
}

double check_compatibility(const OperatorMap& psi, int n, Index cap) {
  const auto lifted = composition_iterates(lift(psi), n, cap).counit_slice();
  return max_difference(lifted, convolution_iterates(psi, n, cap));
}

ConvolutionSemigroup::ConvolutionSemigroup(const OperatorMap& psi) { build(psi.source(), psi.values()); }

ConvolutionSemigroup::ConvolutionSemigroup(const CounitalBialgebra& b, const Functional& psi) {
  std::vector<Matrix> values;
  for (Index i = 0; i < b.dim(); ++i) values.push_back(Matrix::Constant(1, 1, psi(i)));
  build(b, values);
}

void ConvolutionSemigroup::build(const CounitalBialgebra& b, const std::vector<Matrix>& psi) {
  n_ = b.dim();
  target_dim_ = psi.front().rows();
  counit_ = b.counit;
  const Index nn = target_dim_;
  const Index block = nn * nn;
  transfer_ = Matrix::Zero(n_ * block, n_ * block);
  // b_i ⊗ E_rs ↦ Σ_jk Δ_i^jk Σ_r' ψ(b_k)(r', r) b_j ⊗ E_r's
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j)
      for (Index k = 0; k < n_; ++k) {
        const Complex c = b.coproduct(i, j, k);
        if (c == Complex{}) continue;
        const Matrix& pk = psi[static_cast<std::size_t>(k)];
        for (Index r = 0; r < nn; ++r)
          for (Index s = 0; s < nn; ++s)
            for (Index rp = 0; rp < nn; ++rp)
              transfer_(j * block + rp * nn + s, i * block + r * nn + s) += c * pk(rp, r);
      }
}

std::vector<Matrix> ConvolutionSemigroup::evaluate(double t) const {
  const Index nn = target_dim_;
  const Index block = nn * nn;
  const Matrix flow = (Complex(t) * transfer_).exp();
  std::vector<Matrix> out;
  for (Index i = 0; i < n_; ++i) {
    Vector v = Vector::Zero(n_ * block);
    for (Index r = 0; r < nn; ++r) v(i * block + r * nn + r) = 1.0;
    const Vector w = flow * v;
    Matrix m = Matrix::Zero(nn, nn);
    for (Index j = 0; j < n_; ++j)
      for (Index r = 0; r < nn; ++r)
        for (Index s = 0; s < nn; ++s) m(r, s) += counit_(j) * w(j * block + r * nn + s);
    out.push_back(std::move(m));
  }
  return out;
}

Functional ConvolutionSemigroup::evaluate_functional(double t) const {
  if (target_dim_ != 1) throw DimensionError("evaluate_functional needs a scalar semigroup");
  // ε ∘ exp(tT)
  const RowVector row = counit_ * (Complex(t) * transfer_).exp();
  return {row};
}

OperatorMap convolution_exponential(const OperatorMap& psi, double t) {
  return {psi.source_ptr(), ConvolutionSemigroup(psi).evaluate(t)};
}

Functional convolution_exponential(const CounitalBialgebra& b, const Functional& psi, double t) {
  return ConvolutionSemigroup(b, psi).evaluate_functional(t);
}

}  // namespace qrw

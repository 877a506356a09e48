#include "qrw/bialgebra.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qrw {

Matrix Tensor3::slice(Index i) const {
  Matrix out(n1_, n2_);
  for (Index j = 0; j < n1_; ++j)
    for (Index k = 0; k < n2_; ++k) out(j, k) = (*this)(i, j, k);
  return out;
}

Vector CounitalBialgebra::basis(Index i) const {
  Vector v = Vector::Zero(dim());
  v(i) = 1.0;
  return v;
}

Vector CounitalBialgebra::multiply(const Vector& a, const Vector& b) const {
  const Index n = dim();
  Vector out = Vector::Zero(n);
  for (Index i = 0; i < n; ++i) {
    if (a(i) == Complex{}) continue;
    for (Index j = 0; j < n; ++j) {
      const Complex w = a(i) * b(j);
      if (w == Complex{}) continue;
      for (Index k = 0; k < n; ++k) out(k) += w * product(i, j, k);
    }
  }
  return out;
}

Vector CounitalBialgebra::star(const Vector& a) const { return involution * a.conjugate(); }

Matrix CounitalBialgebra::coproduct_of(const Vector& a) const {
  const Index n = dim();
  Matrix out = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    if (a(i) != Complex{}) out += a(i) * coproduct.slice(i);
  return out;
}

Matrix CounitalBialgebra::represent(const Vector& a) const {
  Matrix out = Matrix::Zero(rep_dim(), rep_dim());
  for (Index i = 0; i < dim(); ++i)
    if (a(i) != Complex{}) out += a(i) * rep[static_cast<std::size_t>(i)];
  return out;
}

Vector CounitalBialgebra::star_product(Index i, Index j) const {
  return multiply(star(basis(i)), basis(j));
}

bool CounitalBialgebra::is_cocommutative(double tol) const {
  for (Index i = 0; i < dim(); ++i) {
    const Matrix c = coproduct.slice(i);
    if (max_abs(c - c.transpose()) > tol) return false;
  }
  return true;
}

BialgebraPtr build_function_algebra(const FiniteGroup& group) {
  const Index n = group.order();
  auto b = std::make_shared<CounitalBialgebra>();
  b->name = "C(G)";
  b->product = Tensor3(n, n, n);
  b->coproduct = Tensor3(n, n, n);
  b->involution = Matrix::Identity(n, n);
  b->unit = Vector::Ones(n);
  b->counit = RowVector::Zero(n);
  b->counit(group.identity()) = 1.0;
  for (Index g = 0; g < n; ++g) {
    b->labels.push_back("d_" + group.label(static_cast<int>(g)));
    b->product(g, g, g) = 1.0;
    for (Index s = 0; s < n; ++s) {
      const int t = group.mult(group.inverse(static_cast<int>(s)), static_cast<int>(g));
      b->coproduct(g, s, t) = 1.0;
    }
    RowVector point = RowVector::Zero(n);
    point(g) = 1.0;
    b->characters.push_back(point);
    Matrix r = Matrix::Zero(n, n);
    r(g, g) = 1.0;
    b->rep.push_back(r);
  }
  // Counit first among the characters.
  std::swap(b->characters[0], b->characters[static_cast<std::size_t>(group.identity())]);
  return b;
}

BialgebraPtr build_group_algebra(const FiniteGroup& group) {
  const Index n = group.order();
  auto b = std::make_shared<CounitalBialgebra>();
  b->name = "C[G]";
  b->product = Tensor3(n, n, n);
  b->coproduct = Tensor3(n, n, n);
  b->involution = Matrix::Zero(n, n);
  b->unit = Vector::Zero(n);
  b->unit(group.identity()) = 1.0;
  b->counit = RowVector::Ones(n);
  for (Index g = 0; g < n; ++g) {
    const int gi = static_cast<int>(g);
    b->labels.push_back("l_" + group.label(gi));
    for (Index h = 0; h < n; ++h) b->product(g, h, group.mult(gi, static_cast<int>(h))) = 1.0;
    b->involution(group.inverse(gi), g) = 1.0;
    b->coproduct(g, g, g) = 1.0;
    // Left regular representation: L_g e_h = e_{gh}.
    Matrix r = Matrix::Zero(n, n);
    for (Index h = 0; h < n; ++h) r(group.mult(gi, static_cast<int>(h)), h) = 1.0;
    b->rep.push_back(r);
  }
  for (const auto& values : one_dimensional_representations(group)) {
    RowVector chi(n);
    for (Index g = 0; g < n; ++g) chi(g) = values[static_cast<std::size_t>(g)];
    b->characters.push_back(chi);
  }
  return b;
}

namespace {

// Tracks a running maximum and where it was attained.
struct MaxTracker {
  double value = 0.0;
  std::vector<Index> where;
  void update(double r, std::vector<Index> idx) {
    if (r > value) {
      value = r;
      where = std::move(idx);
    }
  }
};

double vec_residual(const Vector& a, const Vector& b) { return max_abs(a - b); }

// Product in B ⊗ B of coefficient matrices, exploiting sparsity.
class TensorSquareProduct {
 public:
  explicit TensorSquareProduct(const CounitalBialgebra& b) : n_(b.dim()), nz_(static_cast<std::size_t>(n_ * n_)) {
    for (Index a = 0; a < n_; ++a)
      for (Index c = 0; c < n_; ++c)
        for (Index p = 0; p < n_; ++p)
          if (b.product(a, c, p) != Complex{})
            nz_[static_cast<std::size_t>(a * n_ + c)].emplace_back(p, b.product(a, c, p));
  }

  Matrix operator()(const Matrix& x, const Matrix& y) const {
    Matrix out = Matrix::Zero(n_, n_);
    for (Index a = 0; a < n_; ++a)
      for (Index b = 0; b < n_; ++b) {
        if (x(a, b) == Complex{}) continue;
        for (Index c = 0; c < n_; ++c)
          for (Index d = 0; d < n_; ++d) {
            const Complex w = x(a, b) * y(c, d);
            if (w == Complex{}) continue;
            for (const auto& [p, mp] : nz_[static_cast<std::size_t>(a * n_ + c)])
              for (const auto& [q, mq] : nz_[static_cast<std::size_t>(b * n_ + d)]) out(p, q) += w * mp * mq;
          }
      }
    return out;
  }

 private:
  Index n_;
  std::vector<std::vector<std::pair<Index, Complex>>> nz_;
};

}  // namespace

double BialgebraReport::residual(const std::string& axiom) const {
  for (const auto& c : checks)
    if (c.axiom == axiom) return c.residual;
  return 0.0;
}

double BialgebraReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

const AxiomCheck* BialgebraReport::first_failure(double tol) const {
  for (const auto& c : checks)
    if (!(c.residual <= tol)) return &c;
  return nullptr;
}

BialgebraReport verify_bialgebra(const CounitalBialgebra& b) {
  BialgebraReport report;
  const Index n = b.dim();
  auto e = [&](Index i) { return b.basis(i); };

  {
    MaxTracker t;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          t.update(vec_residual(b.multiply(b.multiply(e(i), e(j)), e(k)), b.multiply(e(i), b.multiply(e(j), e(k)))),
                   {i, j, k});
    report.checks.push_back({"associativity", t.value, t.where});
  }
  {
    MaxTracker t;
    for (Index i = 0; i < n; ++i) {
      t.update(vec_residual(b.multiply(b.unit, e(i)), e(i)), {i});
      t.update(vec_residual(b.multiply(e(i), b.unit), e(i)), {i});
    }
    report.checks.push_back({"unit", t.value, t.where});
  }
  {
    MaxTracker t;
    for (Index i = 0; i < n; ++i) {
      t.update(vec_residual(b.star(b.star(e(i))), e(i)), {i});
      for (Index j = 0; j < n; ++j)
        t.update(vec_residual(b.star(b.multiply(e(i), e(j))), b.multiply(b.star(e(j)), b.star(e(i)))), {i, j});
    }
    report.checks.push_back({"involution", t.value, t.where});
  }
  {
    MaxTracker t;
    const auto m = b.rep_dim();
    if (static_cast<Index>(b.rep.size()) != n) {
      t.update(1.0, {});
    } else {
      t.update(op_norm(b.represent(b.unit) - Matrix::Identity(m, m)), {});
      for (Index i = 0; i < n; ++i) {
        const Matrix& ri = b.rep[static_cast<std::size_t>(i)];
        t.update(op_norm(b.represent(b.star(e(i))) - ri.adjoint()), {i});
        for (Index j = 0; j < n; ++j)
          t.update(op_norm(b.represent(b.multiply(e(i), e(j))) - ri * b.rep[static_cast<std::size_t>(j)]), {i, j});
      }
      Matrix stacked(m * m, n);
      for (Index i = 0; i < n; ++i)
        stacked.col(i) = b.rep[static_cast<std::size_t>(i)].reshaped();
      Eigen::JacobiSVD<Matrix> svd(stacked);
      report.faithfulness = svd.singularValues()(n - 1);
    }
    report.checks.push_back({"representation", t.value, t.where});
  }
  {
    MaxTracker t;
    for (Index i = 0; i < n; ++i) {
      // (Δ ⊗ id)Δ(b_i) and (id ⊗ Δ)Δ(b_i) as n^3 tensors.
      for (Index p = 0; p < n; ++p)
        for (Index q = 0; q < n; ++q)
          for (Index r = 0; r < n; ++r) {
            Complex left{}, right{};
            for (Index j = 0; j < n; ++j) {
              left += b.coproduct(i, j, r) * b.coproduct(j, p, q);
              right += b.coproduct(i, p, j) * b.coproduct(j, q, r);
            }
            t.update(std::abs(left - right), {i});
          }
    }
    report.checks.push_back({"coassociativity", t.value, t.where});
  }
  {
    MaxTracker t;
    for (Index i = 0; i < n; ++i) {
      const Matrix c = b.coproduct.slice(i);
      const Vector right = c * b.counit.transpose();  // (id ⊗ ε)Δ
      const Vector left = (b.counit * c).transpose();  // (ε ⊗ id)Δ
      t.update(std::max(vec_residual(right, e(i)), vec_residual(left, e(i))), {i});
    }
    report.checks.push_back({"counit", t.value, t.where});
  }
  {
    MaxTracker t;
    const TensorSquareProduct mult2(b);
    std::vector<Matrix> delta;
    for (Index i = 0; i < n; ++i) delta.push_back(b.coproduct.slice(i));
    t.update(max_abs(b.coproduct_of(b.unit) - b.unit * b.unit.transpose()), {});
    for (Index i = 0; i < n; ++i) {
      const Matrix& di = delta[static_cast<std::size_t>(i)];
      const Matrix star_d = b.involution * di.conjugate() * b.involution.transpose();
      t.update(max_abs(b.coproduct_of(b.star(e(i))) - star_d), {i});
      for (Index j = 0; j < n; ++j)
        t.update(max_abs(b.coproduct_of(b.multiply(e(i), e(j))) - mult2(di, delta[static_cast<std::size_t>(j)])),
                 {i, j});
    }
    report.checks.push_back({"coproduct_homomorphism", t.value, t.where});
  }
  {
    MaxTracker t;
    // The counit is a character too.
    std::vector<RowVector> chars{b.counit};
    chars.insert(chars.end(), b.characters.begin(), b.characters.end());
    for (std::size_t c = 0; c < chars.size(); ++c) {
      const RowVector& chi = chars[c];
      const auto ci = static_cast<Index>(c);
      t.update(std::abs((chi * b.unit)(0) - 1.0), {ci});
      for (Index i = 0; i < n; ++i) {
        t.update(std::abs((chi * b.star(e(i)))(0) - std::conj(chi(i))), {ci, i});
        for (Index j = 0; j < n; ++j)
          t.update(std::abs((chi * b.multiply(e(i), e(j)))(0) - chi(i) * chi(j)), {ci, i, j});
      }
    }
    report.checks.push_back({"characters", t.value, t.where});
  }
  report.cocommutative = b.is_cocommutative();
  return report;
}

}  // namespace qrw

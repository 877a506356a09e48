#include "qrw/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qrw/errors.hpp"

namespace qrw {

double max_step(const Vector& xi) {
  const double n2 = xi.squaredNorm();
  return n2 > 0.0 ? 1.0 / n2 : std::numeric_limits<double>::infinity();
}

WalkStep build_unitary(const Vector& xi, double h) {
  if (!(h > 0.0)) throw DomainError("step length h must be positive");
  const double n2 = xi.squaredNorm();
  if (h * n2 > 1.0) {
    std::ostringstream os;
    os << "step length violates h·|xi|^2 <= 1 (h = " << h << ", |xi|^2 = " << n2 << ")";
    throw DomainError(os.str());
  }
  const Index p = xi.size();
  WalkStep w;
  w.h = h;
  w.c = std::sqrt(1.0 - h * n2);
  w.s = std::sqrt(h) * xi;
  w.d = -h * n2 / (1.0 + w.c);
  w.q = n2 > 0.0 ? Matrix(outer(xi, xi) / n2) : Matrix::Zero(p, p);

  w.op = Matrix::Zero(p + 1, p + 1);
  w.op(0, 0) = w.c;
  w.op.block(0, 1, 1, p) = -w.s.adjoint();
  w.op.block(1, 0, p, 1) = w.s;
  // cQ + Q⊥ = I + d Q
  w.op.bottomRightCorner(p, p) = Matrix::Identity(p, p) + w.d * w.q;
  return w;
}

WalkStep build_isometry(const Vector& xi, const Matrix& isometry, double h) {
  if (isometry.rows() != xi.size()) throw DimensionError("D must map into the space of ξ");
  WalkStep w = build_unitary(xi, h);
  const Index d = isometry.cols();
  Matrix lift = Matrix::Zero(xi.size() + 1, d + 1);
  lift(0, 0) = 1.0;
  lift.bottomRightCorner(xi.size(), d) = isometry;
  w.op = w.op * lift;
  return w;
}

namespace {

OperatorMap conjugated_sum(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, const Matrix& v) {
  std::vector<Matrix> values;
  for (Index i = 0; i < b->dim(); ++i)
    values.push_back(v.adjoint() * direct_sum(chi(i), t.pi[static_cast<std::size_t>(i)]) * v);
  return {std::move(b), std::move(values)};
}

}  // namespace

OperatorMap build_walk_rep(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h) {
  require_valid_triple(*b, t);
  const auto step = build_unitary(t.xi, h);
  return conjugated_sum(std::move(b), t, chi, step.op);
}

OperatorMap build_walk_cp(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h) {
  if (!t.isometry) throw DomainError("CP walk needs an isometry D");
  require_valid_triple(*b, t);
  const auto step = build_isometry(t.xi, *t.isometry, h);
  return conjugated_sum(std::move(b), t, chi, step.op);
}

OperatorMap build_walk(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h) {
  return t.isometry ? build_walk_cp(std::move(b), t, chi, h) : build_walk_rep(std::move(b), t, chi, h);
}

OperatorMap build_generator(BialgebraPtr b, const ImplementingTriple& t, const Character& chi) {
  return t.isometry ? cp_generator_from_triple(std::move(b), t, chi) : structure_map_from_pair(std::move(b), t, chi);
}

std::pair<OperatorMap, OperatorMap> error_terms(BialgebraPtr b, const ImplementingTriple& t, const Character& chi) {
  require_valid_triple(*b, t);
  const Index p = t.space_dim();
  const Matrix dmat = t.isometry ? *t.isometry : Matrix::Identity(p, p);
  const Index d = dmat.cols();
  const Vector eta = dmat.adjoint() * t.xi;
  const Matrix x = outer(t.xi, t.xi);
  const Matrix y = outer(t.xi, eta);
  // X enters φ₂ through its compression D^* X D = |η><η|.
  const Matrix x_compressed = dmat.adjoint() * x * dmat;

  std::vector<Matrix> phi1, phi2;
  for (const auto& v : t.nu(chi)) {
    const Complex gamma = t.xi.dot(v * t.xi);
    Matrix m1 = Matrix::Zero(d + 1, d + 1);
    m1.block(0, 1, 1, d) = gamma * eta.adjoint();
    m1.block(1, 0, d, 1) = gamma * eta;
    m1.bottomRightCorner(d, d) = y.adjoint() * v * dmat + dmat.adjoint() * v * y;
    phi1.push_back(std::move(m1));

    Matrix m2 = Matrix::Zero(d + 1, d + 1);
    m2.bottomRightCorner(d, d) = gamma * x_compressed;
    phi2.push_back(std::move(m2));
  }
  return {OperatorMap(b, std::move(phi1)), OperatorMap(b, std::move(phi2))};
}

double verify_error_identity(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h) {
  const auto phi = build_generator(b, t, chi);
  const auto psi = build_walk(b, t, chi, h);
  const auto lhs = generator_difference(phi, psi, chi, h);
  const auto [phi1, phi2] = error_terms(b, t, chi);
  const double c = std::sqrt(1.0 - h * t.xi.squaredNorm());
  const double a1 = h / (1.0 + c);
  const OperatorMap rhs = Complex(a1) * phi1 - Complex(a1 * a1) * phi2;
  return max_difference(lhs, rhs);
}

double vector_state_check(BialgebraPtr b, const ImplementingTriple& t, const Character& chi, double h) {
  const auto rho = build_walk_rep(b, t, chi, h);
  const auto step = build_unitary(t.xi, h);
  const Vector omega = step.op.col(0);
  const auto nu = t.nu(chi);
  double r = 0.0;
  for (Index i = 0; i < b->dim(); ++i) {
    const Complex corner = rho[i](0, 0);
    const Complex via_omega = omega.dot(direct_sum(chi(i), t.pi[static_cast<std::size_t>(i)]) * omega);
    const Complex gamma = t.xi.dot(nu[static_cast<std::size_t>(i)] * t.xi);
    r = std::max(r, std::abs(corner - via_omega) + std::abs(corner - (chi(i) + h * gamma)));
  }
  return r;
}

WalkProperties walk_properties(const OperatorMap& psi) {
  const auto& b = psi.source();
  WalkProperties out;
  for (Index i = 0; i < b.dim(); ++i) {
    out.involution = std::max(out.involution, op_norm(psi.evaluate(b.star(b.basis(i))) - psi[i].adjoint()));
    for (Index j = 0; j < b.dim(); ++j)
      out.multiplicativity =
          std::max(out.multiplicativity, op_norm(psi.evaluate(b.multiply(b.basis(i), b.basis(j))) - psi[i] * psi[j]));
  }
  out.unit = op_norm(psi.at_unit() - Matrix::Identity(psi.target_dim(), psi.target_dim()));
  out.choi_min_eigenvalue = min_hermitian_eigenvalue(cp_block_matrix(psi));
  return out;
}

double isometry_residual(const WalkStep& step) {
  return op_norm(step.op.adjoint() * step.op - Matrix::Identity(step.op.cols(), step.op.cols()));
}

}  // namespace qrw

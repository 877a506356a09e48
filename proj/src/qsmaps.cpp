#include "qrw/qsmaps.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "qrw/errors.hpp"

namespace qrw {

std::vector<Matrix> ImplementingTriple::nu(const Character& chi) const {
  std::vector<Matrix> out;
  const Index p = space_dim();
  for (std::size_t i = 0; i < pi.size(); ++i)
    out.push_back(pi[i] - chi(static_cast<Index>(i)) * Matrix::Identity(p, p));
  return out;
}

namespace {

Matrix rep_of(const std::vector<Matrix>& rep, const Vector& a) {
  Matrix out = Matrix::Zero(rep.front().rows(), rep.front().cols());
  for (std::size_t i = 0; i < rep.size(); ++i)
    if (a(static_cast<Index>(i)) != Complex{}) out += a(static_cast<Index>(i)) * rep[i];
  return out;
}

}  // namespace

TripleReport check_triple(const CounitalBialgebra& b, const ImplementingTriple& t) {
  const Index n = b.dim();
  const Index p = t.space_dim();
  if (static_cast<Index>(t.pi.size()) != n) throw DimensionError("π needs one matrix per basis element");
  for (const auto& m : t.pi)
    if (m.rows() != p || m.cols() != p) throw DimensionError("π matrices must be p x p with p = dim ξ");
  if (t.isometry && t.isometry->rows() != p) throw DimensionError("D must map into the space of ξ");

  TripleReport r;
  for (Index i = 0; i < n; ++i) {
    const Matrix& pi_i = t.pi[static_cast<std::size_t>(i)];
    r.involution = std::max(r.involution, op_norm(rep_of(t.pi, b.star(b.basis(i))) - pi_i.adjoint()));
    for (Index j = 0; j < n; ++j)
      r.multiplicativity = std::max(
          r.multiplicativity,
          op_norm(rep_of(t.pi, b.multiply(b.basis(i), b.basis(j))) - pi_i * t.pi[static_cast<std::size_t>(j)]));
  }
  r.unitality = op_norm(rep_of(t.pi, b.unit) - Matrix::Identity(p, p));
  if (t.isometry) {
    const Index d = t.isometry->cols();
    r.isometry = op_norm(t.isometry->adjoint() * *t.isometry - Matrix::Identity(d, d));
  }
  return r;
}

void require_valid_triple(const CounitalBialgebra& b, const ImplementingTriple& t, double tol) {
  const auto r = check_triple(b, t);
  if (r.multiplicativity > tol || r.involution > tol) throw DomainError("π is not a *-homomorphism");
  if (r.isometry > tol) throw DomainError("D is not an isometry");
}

double character_residual(const CounitalBialgebra& b, const Character& chi) {
  double r = std::abs(chi.apply(b.unit) - 1.0);
  for (Index i = 0; i < b.dim(); ++i) {
    r = std::max(r, std::abs(chi.apply(b.star(b.basis(i))) - std::conj(chi(i))));
    for (Index j = 0; j < b.dim(); ++j)
      r = std::max(r, std::abs(chi.apply(b.multiply(b.basis(i), b.basis(j))) - chi(i) * chi(j)));
  }
  return r;
}

OperatorMap structure_map_from_pair(BialgebraPtr b, const ImplementingTriple& t, const Character& chi) {
  require_valid_triple(*b, t);
  const Index p = t.space_dim();
  const auto nu = t.nu(chi);
  std::vector<Matrix> values;
  for (const auto& v : nu) {
    Matrix m(p + 1, p + 1);
    const Vector col = v * t.xi;
    m(0, 0) = t.xi.dot(col);
    m.block(0, 1, 1, p) = t.xi.adjoint() * v;
    m.block(1, 0, p, 1) = col;
    m.bottomRightCorner(p, p) = v;
    values.push_back(std::move(m));
  }
  return {std::move(b), std::move(values)};
}

double verify_structure_relation(const OperatorMap& phi, const Character& chi) {
  const auto& b = phi.source();
  const Matrix delta = HatSpace{phi.target_dim() - 1}.noise_projection();
  double r = 0.0;
  for (Index i = 0; i < b.dim(); ++i) {
    const Matrix ai = phi[i].adjoint();
    for (Index j = 0; j < b.dim(); ++j) {
      const Matrix lhs = phi.evaluate(b.star_product(i, j));
      const Matrix rhs = ai * chi(j) + std::conj(chi(i)) * phi[j] + ai * delta * phi[j];
      r = std::max(r, op_norm(lhs - rhs));
    }
  }
  return r;
}

ExtractionResult extract_implementing_pair(const OperatorMap& phi, const Character& chi, double tol) {
  const auto& b = phi.source();
  const Index n = b.dim();
  const Index p = phi.target_dim() - 1;
  auto fail = [](const std::string& what) { throw AxiomError("not a χ-structure map: " + what); };

  ExtractionResult result;
  auto& t = result.triple;
  std::vector<Matrix> nu;
  for (Index i = 0; i < n; ++i) {
    nu.push_back(phi[i].bottomRightCorner(p, p));
    t.pi.push_back(nu.back() + chi(i) * Matrix::Identity(p, p));
  }
  t.xi = Vector::Zero(p);
  const auto rep_check = check_triple(b, t);
  if (rep_check.multiplicativity > tol || rep_check.involution > tol)
    fail("ν + χ(·)I is not a *-homomorphism");

  if (p > 0) {
    Matrix stacked(n * p, p);
    Vector rhs(n * p);
    for (Index i = 0; i < n; ++i) {
      stacked.block(i * p, 0, p, p) = nu[static_cast<std::size_t>(i)];
      rhs.segment(i * p, p) = phi[i].block(1, 0, p, 1);
    }
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(stacked);
    cod.setThreshold(tol);
    t.xi = cod.solve(rhs);
    result.kernel_dim = p - cod.rank();
    if (max_abs(stacked * t.xi - rhs) > tol) fail("lower-left column is not ν(·)ξ for any ξ");
  }

  for (Index i = 0; i < n; ++i) {
    const Matrix& v = nu[static_cast<std::size_t>(i)];
    if (std::abs(phi[i](0, 0) - t.xi.dot(v * t.xi)) > tol) fail("top-left entry differs from <ξ, ν(·)ξ>");
    if (p > 0 && max_abs(phi[i].block(0, 1, 1, p) - t.xi.adjoint() * v) > tol)
      fail("top row differs from <ξ|ν(·)");
  }
  result.round_trip = max_difference(structure_map_from_pair(phi.source_ptr(), t, chi), phi);
  if (result.round_trip > tol) fail("round trip residual too large");
  return result;
}

OperatorMap cp_generator_from_triple(BialgebraPtr b, const ImplementingTriple& t, const Character& chi) {
  if (!t.isometry) throw DomainError("cp generator needs an isometry D");
  require_valid_triple(*b, t);
  const Index p = t.space_dim();
  const Index d = t.noise_dim();
  Matrix w(p, d + 1);
  w.col(0) = t.xi;
  w.rightCols(d) = *t.isometry;
  std::vector<Matrix> values;
  for (const auto& v : t.nu(chi)) values.push_back(w.adjoint() * v * w);
  return {std::move(b), std::move(values)};
}

Vector default_zeta(const ImplementingTriple& t) {
  Vector z(t.noise_dim() + 1);
  z(0) = 0.5 * t.xi.squaredNorm();
  z.tail(t.noise_dim()) = t.eta();
  return z;
}

Matrix cp_block_matrix(const OperatorMap& phi) {
  const auto& b = phi.source();
  const Index n = b.dim();
  const Index k = phi.target_dim();
  Matrix m(n * k, n * k);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m.block(i * k, j * k, k, k) = phi.evaluate(b.star_product(i, j));
  return m;
}

CpDecompositionReport verify_cp_decomposition(const OperatorMap& phi, const Character& chi, const Vector& zeta,
                                              double tol) {
  const Index k = phi.target_dim();
  if (zeta.size() != k) throw DimensionError("ζ must live in the hat space");
  const HatSpace hat{k - 1};
  const Matrix corner = hat.noise_projection() + outer(zeta, hat.e0()) + outer(hat.e0(), zeta);
  std::vector<Matrix> phi2;
  for (Index i = 0; i < phi.source_dim(); ++i) phi2.push_back(chi(i) * corner);
  const OperatorMap phi1 = phi + OperatorMap(phi.source_ptr(), std::move(phi2));

  CpDecompositionReport r;
  r.phi1_min_eigenvalue = min_hermitian_eigenvalue(cp_block_matrix(phi1));
  r.phi_unit_max_eigenvalue = max_hermitian_eigenvalue(phi.at_unit());
  r.phi1_is_cp = r.phi1_min_eigenvalue >= -tol;
  r.phitilde_one_negative = r.phi_unit_max_eigenvalue <= tol;
  return r;
}

Matrix scaling_conjugation(const Matrix& x, double h) {
  if (!(h > 0.0)) throw DomainError("scaling conjugation needs h > 0");
  const double s = 1.0 / std::sqrt(h);
  Matrix out = x;
  out.row(0) *= s;
  out.col(0) *= s;
  return out;
}

OperatorMap scaling_conjugation(const OperatorMap& phi, double h) {
  std::vector<Matrix> values;
  for (const auto& m : phi.values()) values.push_back(scaling_conjugation(m, h));
  return {phi.source_ptr(), std::move(values)};
}

double cb_norm_surrogate(const OperatorMap& phi) {
  const auto& b = phi.source();
  const Index n = b.dim();
  const Index m = b.rep_dim();
  const Index k = phi.target_dim();

  // Hilbert-Schmidt projection onto span{R(b_i)}: coefficients G^{-1} [<R_i, x>].
  Matrix gram(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) gram(i, j) = (b.rep[static_cast<std::size_t>(i)].adjoint() * b.rep[static_cast<std::size_t>(j)]).trace();
  const Eigen::LDLT<Matrix> gram_solver(gram);

  Matrix choi = Matrix::Zero(m * k, m * k);
  Vector w(n);
  for (Index a = 0; a < m; ++a)
    for (Index c = 0; c < m; ++c) {
      for (Index i = 0; i < n; ++i) w(i) = std::conj(b.rep[static_cast<std::size_t>(i)](a, c));
      const Vector coeffs = gram_solver.solve(w);
      choi.block(a * k, c * k, k, k) = phi.evaluate(coeffs);
    }

  Eigen::BDCSVD<Matrix> svd(choi, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto s = svd.singularValues().cast<Complex>().asDiagonal();
  const Matrix left = svd.matrixU() * s * svd.matrixU().adjoint();
  const Matrix right = svd.matrixV() * s * svd.matrixV().adjoint();
  const double a = op_norm(partial_trace_first(left, m, k));
  const double c = op_norm(partial_trace_first(right, m, k));
  return std::sqrt(a * c);
}

double cb_norm_sampled(const OperatorMap& phi, Index k, int samples, std::uint64_t seed) {
  const auto& b = phi.source();
  const Index n = b.dim();
  double best = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double den = op_norm(b.rep[static_cast<std::size_t>(i)]);
    if (den > 0.0) best = std::max(best, op_norm(phi[i]) / den);
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Matrix> x(static_cast<std::size_t>(n));
  for (int s = 0; s < samples; ++s) {
    for (auto& xi : x) {
      xi.resize(k, k);
      for (Index r = 0; r < k; ++r)
        for (Index c = 0; c < k; ++c) xi(r, c) = Complex(gauss(rng), gauss(rng));
    }
    Matrix num = Matrix::Zero(phi.target_dim() * k, phi.target_dim() * k);
    Matrix den = Matrix::Zero(b.rep_dim() * k, b.rep_dim() * k);
    for (Index i = 0; i < n; ++i) {
      num += kron(phi[i], x[static_cast<std::size_t>(i)]);
      den += kron(b.rep[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]);
    }
    const double d = op_norm(den);
    if (d > 0.0) best = std::max(best, op_norm(num) / d);
  }
  return best;
}

OperatorMap generator_difference(const OperatorMap& phi, const OperatorMap& psi, const Character& chi, double h) {
  require_same_shape(phi, psi);
  const OperatorMap centered = psi - OperatorMap::scalar(psi.source_ptr(), chi, psi.target_dim());
  return phi - scaling_conjugation(centered, h);
}

double generator_gap(const OperatorMap& phi, const OperatorMap& psi, const Character& chi, double h) {
  return cb_norm_surrogate(generator_difference(phi, psi, chi, h));
}

}  // namespace qrw

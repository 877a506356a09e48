#include "qrw/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qrw {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out = Eigen::kroneckerProduct(a, b);
  return out;
}

double op_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double min_hermitian_eigenvalue(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double max_hermitian_eigenvalue(const Matrix& m) {
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Matrix direct_sum(Complex z, const Matrix& m) {
  Matrix out = Matrix::Zero(m.rows() + 1, m.cols() + 1);
  out(0, 0) = z;
  out.bottomRightCorner(m.rows(), m.cols()) = m;
  return out;
}

Matrix partial_trace_first(const Matrix& m, Index outer, Index inner) {
  Matrix out = Matrix::Zero(inner, inner);
  for (Index a = 0; a < outer; ++a) out += m.block(a * inner, a * inner, inner, inner);
  return out;
}

Matrix outer(const Vector& u, const Vector& v) { return u * v.adjoint(); }

Matrix identity(Index n) { return Matrix::Identity(n, n); }

}  // namespace qrw

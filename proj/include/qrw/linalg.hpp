#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qrw {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using Index = Eigen::Index;

/// Kronecker product A ⊗ B with A as the slow (outer) index.
Matrix kron(const Matrix& a, const Matrix& b);

/// Largest singular value.
double op_norm(const Matrix& m);

/// Largest absolute entry; 0 for empty matrices.
double max_abs(const Matrix& m);

/// Smallest eigenvalue of the Hermitian part (m + m*)/2.
double min_hermitian_eigenvalue(const Matrix& m);

/// Largest eigenvalue of the Hermitian part (m + m*)/2.
double max_hermitian_eigenvalue(const Matrix& m);

/// [[z, 0], [0, m]] on C ⊕ H.
Matrix direct_sum(Complex z, const Matrix& m);

/// Partial trace over the first tensor factor of C^outer ⊗ C^inner.
Matrix partial_trace_first(const Matrix& m, Index outer, Index inner);

/// |u><v|
Matrix outer(const Vector& u, const Vector& v);

Matrix identity(Index n);

}  // namespace qrw

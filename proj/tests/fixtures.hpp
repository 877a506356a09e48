#pragma once

#include <random>
#include <vector>

#include "qrw/bialgebra.hpp"
#include "qrw/operator_map.hpp"
#include "qrw/qsmaps.hpp"

namespace fx {

using namespace qrw;

inline BialgebraPtr cz2() { return build_function_algebra(FiniteGroup::cyclic(2)); }
inline BialgebraPtr cs3() { return build_function_algebra(FiniteGroup::symmetric(3)); }
inline BialgebraPtr gz2() { return build_group_algebra(FiniteGroup::cyclic(2)); }
inline BialgebraPtr gs3() { return build_group_algebra(FiniteGroup::symmetric(3)); }

inline Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline Vector random_vector(Index n, std::mt19937_64& rng, double scale = 1.0) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = random_complex(rng);
  return scale * v / v.norm();
}

inline Matrix random_matrix(Index r, Index c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = random_complex(rng);
  return m;
}

inline Matrix random_unitary(Index n, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(random_matrix(n, n, rng));
  return qr.householderQ();
}

/// Isometry ℂ^d -> ℂ^p.
inline Matrix random_isometry(Index p, Index d, std::mt19937_64& rng) {
  return random_unitary(p, rng).leftCols(d);
}

/// Unitary conjugate of the faithful representation of B (a unital *-rep).
inline std::vector<Matrix> conjugated_rep(const CounitalBialgebra& b, std::mt19937_64& rng) {
  const Matrix u = random_unitary(b.rep_dim(), rng);
  std::vector<Matrix> out;
  for (const auto& r : b.rep) out.push_back(u.adjoint() * r * u);
  return out;
}

/// π = χ_k ⊕ faithful rep: another unital *-representation.
inline std::vector<Matrix> character_plus_rep(const CounitalBialgebra& b, std::size_t k) {
  std::vector<Matrix> out;
  for (Index i = 0; i < b.dim(); ++i) out.push_back(direct_sum(b.characters[k](i), b.rep[static_cast<std::size_t>(i)]));
  return out;
}

inline std::vector<Matrix> character_rep(const CounitalBialgebra& b, std::size_t k) {
  std::vector<Matrix> out;
  for (Index i = 0; i < b.dim(); ++i) out.push_back(Matrix::Constant(1, 1, b.characters[k](i)));
  return out;
}

/// Three distinct triples for a bialgebra (no isometry).
inline std::vector<ImplementingTriple> sample_triples(const CounitalBialgebra& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ImplementingTriple> out;
  out.push_back({b.rep, random_vector(b.rep_dim(), rng, 0.9), std::nullopt});
  out.push_back({conjugated_rep(b, rng), random_vector(b.rep_dim(), rng, 0.5), std::nullopt});
  const auto k = b.characters.size() > 1 ? 1 : 0;
  out.push_back({character_plus_rep(b, k), random_vector(b.rep_dim() + 1, rng, 1.3), std::nullopt});
  return out;
}

inline Character counit(const CounitalBialgebra& b) { return Character::counit(b); }

}  // namespace fx

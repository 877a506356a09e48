#include <unsupported/Eigen/MatrixFunctions>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qrw/convolution.hpp"
#include "qrw/errors.hpp"
#include "qrw/walk.hpp"

using namespace qrw;

namespace {

OperatorMap random_map(const BialgebraPtr& b, Index m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matrix> v;
  for (Index i = 0; i < b->dim(); ++i) v.push_back(0.5 * fx::random_matrix(m, m, rng));
  return OperatorMap(b, std::move(v));
}

Functional random_functional(const BialgebraPtr& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RowVector v(b->dim());
  for (Index i = 0; i < b->dim(); ++i) v(i) = fx::random_complex(rng);
  return {v};
}

double max_diff(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, max_abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("counit is the convolution unit") {
  for (const auto& b : {fx::cz2(), fx::cs3(), fx::gz2(), fx::gs3()}) {
    const Functional eps{b->counit};
    const auto f = random_functional(b, 1);
    CHECK((convolve(*b, eps, f).values - f.values).norm() < 1e-15);
    CHECK((convolve(*b, f, eps).values - f.values).norm() < 1e-15);
    const auto psi = random_map(b, 2, 2);
    const auto e = OperatorMap::scalar(b, eps, 1);
    CHECK(max_difference(convolve(e, psi), psi) < 1e-15);
    CHECK(max_difference(convolve(psi, e), psi) < 1e-15);
  }
}

TEST_CASE("grouplike closed forms") {
  SUBCASE("C[G]: pointwise product on grouplikes") {
    const auto b = fx::gs3();
    const auto f = random_functional(b, 3), g = random_functional(b, 4);
    const auto fg = convolve(*b, f, g);
    for (Index i = 0; i < 6; ++i) CHECK(std::abs(fg(i) - f(i) * g(i)) < 1e-15);
    const auto phi = random_map(b, 2, 5), psi = random_map(b, 3, 6);
    const auto pp = convolve(phi, psi);
    for (Index i = 0; i < 6; ++i) CHECK(max_abs(pp[i] - kron(phi[i], psi[i])) < 1e-15);
  }
  SUBCASE("C(G): group convolution") {
    const auto s3 = FiniteGroup::symmetric(3);
    const auto b = build_function_algebra(s3);
    const auto f = random_functional(b, 7), g = random_functional(b, 8);
    const auto fg = convolve(*b, f, g);
    for (int x = 0; x < 6; ++x) {
      Complex want{};
      for (int s = 0; s < 6; ++s)
        for (int t = 0; t < 6; ++t)
          if (s3.mult(s, t) == x) want += f(s) * g(t);
      CHECK(std::abs(fg(x) - want) < 1e-14);
    }
    CHECK((fg.values - oracle::convolve(*b, f.values, g.values)).norm() < 1e-14);
  }
}

TEST_CASE("convolution is associative") {
  const auto b = fx::cs3();
  const auto f = random_map(b, 2, 9), g = random_map(b, 2, 10), k = random_map(b, 1, 11);
  CHECK(max_difference(convolve(convolve(f, g), k), convolve(f, convolve(g, k))) < 1e-13);
  const auto ff = random_map(b, 2, 12);
  CHECK(max_difference(convolve_multiplicative(convolve_multiplicative(f, g), ff),
                       convolve_multiplicative(f, convolve_multiplicative(g, ff))) < 1e-13);
}

TEST_CASE("convolution iterates") {
  const auto b = fx::cs3();
  const auto psi = random_map(b, 2, 13);
  SUBCASE("n = 0 is the counit, n = 1 is ψ") {
    const auto zero = convolution_iterates(psi, 0);
    CHECK(zero.target_dim() == 1);
    for (Index i = 0; i < 6; ++i) CHECK(zero[i](0, 0) == b->counit(i));
    CHECK(max_difference(convolution_iterates(psi, 1), psi) == 0.0);
  }
  SUBCASE("ψ^{⋆(m+n)} = ψ^{⋆m} ⋆ ψ^{⋆n}") {
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; m + n <= 6; ++n)
        CHECK(max_difference(convolution_iterates(psi, m + n),
                             convolve(convolution_iterates(psi, m), convolution_iterates(psi, n))) < 1e-11);
  }
  SUBCASE("agrees with the iterated coproduct") {
    for (int n = 1; n <= 3; ++n) {
      const auto it = convolution_iterates(psi, n);
      for (Index i = 0; i < 6; ++i) CHECK(max_abs(it[i] - oracle::brute_force_iterate(psi, i, n)) < 1e-13);
    }
  }
  SUBCASE("dimension cap") {
    CHECK_THROWS_AS(convolution_iterates(psi, 5, 16), DimensionError);
    CHECK_NOTHROW(convolution_iterates(psi, 4, 16));
  }
}

TEST_CASE("lift and composition") {
  SUBCASE("counit slice of the lift is ψ") {
    const auto b = fx::gs3();
    const auto psi = random_map(b, 2, 14);
    CHECK(max_difference(lift(psi).counit_slice(), psi) < 1e-15);
    const auto id = composition_iterates(lift(psi), 0);
    CHECK(id.target_dim() == 1);
    CHECK(max_difference(id.counit_slice(), LiftedMap::identity(b).counit_slice()) == 0.0);
  }
  SUBCASE("compatibility on C[Z2] walks up to n = 4") {
    const auto b = fx::gz2();
    Vector xi(2);
    xi << 0.7, Complex(0.1, -0.4);
    const ImplementingTriple t{b->rep, xi, std::nullopt};
    for (double h : {0.5, 0.1})
      for (int n = 1; n <= 4; ++n)
        CHECK(check_compatibility(build_walk(b, t, fx::counit(*b), h), n) < 1e-13);
  }
  SUBCASE("compatibility on C(S3) with a random map up to n = 4") {
    const auto psi = random_map(fx::cs3(), 2, 15);
    for (int n = 1; n <= 4; ++n) CHECK(check_compatibility(psi, n) < 1e-12);
  }
  SUBCASE("composition cap") {
    const auto psi = random_map(fx::gz2(), 3, 16);
    CHECK_THROWS_AS(composition_iterates(lift(psi), 3, 10), DimensionError);
  }
}

TEST_CASE("convolution exponential") {
  SUBCASE("t = 0 gives the counit") {
    const auto b = fx::cs3();
    const auto psi = random_map(b, 2, 17);
    const auto e = convolution_exponential(psi, 0.0);
    for (Index i = 0; i < 6; ++i) CHECK(max_abs(e[i] - b->counit(i) * Matrix::Identity(2, 2)) < 1e-15);
  }
  SUBCASE("grouplikes exponentiate pointwise") {
    const auto b = fx::gs3();
    const auto f = random_functional(b, 18);
    const auto e = convolution_exponential(*b, f, 0.8);
    for (Index i = 0; i < 6; ++i) CHECK(std::abs(e(i) - std::exp(0.8 * f(i))) < 1e-13);
    const auto psi = random_map(b, 2, 19);
    const auto ep = convolution_exponential(psi, 0.6);
    for (Index i = 0; i < 6; ++i) CHECK(max_abs(ep[i] - Matrix((0.6 * psi[i]).exp())) < 1e-13);
  }
  SUBCASE("semigroup law") {
    const auto b = fx::cs3();
    const auto psi = random_map(b, 2, 20);
    const ConvolutionSemigroup sg(psi);
    const OperatorMap a(b, sg.evaluate(0.3)), c(b, sg.evaluate(0.7));
    CHECK(max_difference(convolve_multiplicative(a, c), OperatorMap(b, sg.evaluate(1.0))) < 1e-12);
    const auto f = random_functional(b, 21);
    const ConvolutionSemigroup sf(*b, f);
    CHECK((convolve(*b, sf.evaluate_functional(0.3), sf.evaluate_functional(0.7)).values -
           sf.evaluate_functional(1.0).values)
              .norm() < 1e-12);
  }
  SUBCASE("derivative at zero is ψ") {
    const auto b = fx::cs3();
    const auto f = random_functional(b, 22);
    const double t = 1e-5;
    const RowVector fd = (convolution_exponential(*b, f, t).values - convolution_exponential(*b, f, -t).values) / (2 * t);
    CHECK((fd - f.values).norm() / f.values.norm() < 1e-6);
    const auto psi = random_map(b, 2, 26);
    const ConvolutionSemigroup sg(psi);
    const auto plus = sg.evaluate(t), minus = sg.evaluate(-t);
    double worst = 0.0, scale = 0.0;
    for (Index i = 0; i < b->dim(); ++i) {
      worst = std::max(worst, max_abs((plus[static_cast<std::size_t>(i)] - minus[static_cast<std::size_t>(i)]) / (2 * t) - psi[i]));
      scale = std::max(scale, max_abs(psi[i]));
    }
    CHECK(worst / scale < 1e-6);
  }
  SUBCASE("matches the Taylor series") {
    const auto b = fx::cs3();
    const auto f = random_functional(b, 23);
    CHECK((convolution_exponential(*b, f, 1.3).values - oracle::taylor_exp(*b, f.values, 1.3)).norm() < 1e-11);
    const auto psi = random_map(b, 2, 24);
    CHECK(max_diff(ConvolutionSemigroup(psi).evaluate(0.9), oracle::taylor_exp(psi, 0.9)) < 1e-11);
  }
  SUBCASE("functional evaluation needs a scalar map") {
    const ConvolutionSemigroup sg(random_map(fx::gz2(), 2, 25));
    CHECK_THROWS_AS(sg.evaluate_functional(0.1), DimensionError);
  }
}

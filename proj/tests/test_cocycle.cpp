#include <thread>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "qrw/cocycle.hpp"
#include "qrw/errors.hpp"
#include "qrw/walk.hpp"

using namespace qrw;

namespace {

Vector vec(std::initializer_list<Complex> z) {
  Vector v(static_cast<Index>(z.size()));
  Index i = 0;
  for (auto c : z) v(i++) = c;
  return v;
}

StepFunction piecewise(std::initializer_list<std::pair<double, Vector>> rows) {
  std::vector<StepFunction::Segment> s;
  for (const auto& [dur, v] : rows) s.push_back({dur, v});
  return StepFunction(s.front().value.size(), s);
}

struct Setup {
  BialgebraPtr b;
  ImplementingTriple t;
  OperatorMap phi;
};

Setup s3_cp(std::uint64_t seed) {
  auto b = fx::gs3();
  std::mt19937_64 rng(seed);
  ImplementingTriple t{fx::conjugated_rep(*b, rng), fx::random_vector(6, rng, 0.9), fx::random_isometry(6, 1, rng)};
  auto phi = build_generator(b, t, fx::counit(*b));
  return {b, t, phi};
}

Setup cs3_cp(std::uint64_t seed) {
  auto b = fx::cs3();
  std::mt19937_64 rng(seed);
  ImplementingTriple t{b->rep, fx::random_vector(b->rep_dim(), rng, 0.8), fx::random_isometry(b->rep_dim(), 1, rng)};
  auto phi = build_generator(b, t, fx::counit(*b));
  return {b, t, phi};
}

}  // namespace

TEST_CASE("associated generator") {
  const auto s = cs3_cp(41);
  const Vector c = vec({Complex(0.3, -0.2)}), d = vec({Complex(-0.1, 0.5)});
  const auto f = assoc_generator(s.phi, c, d);
  const Vector ch = vec({1.0, c(0)}), dh = vec({1.0, d(0)});
  for (Index i = 0; i < s.b->dim(); ++i) {
    Complex want = std::conj(c(0)) * d(0) * s.b->counit(i);
    for (Index r = 0; r < 2; ++r)
      for (Index q = 0; q < 2; ++q) want += std::conj(ch(r)) * s.phi[i](r, q) * dh(q);
    CHECK(std::abs(f(i) - want) < 1e-15);
  }
  CHECK_THROWS_AS(assoc_generator(s.phi, vec({1.0, 2.0}), d), DimensionError);
}

TEST_CASE("cocycle matrix elements") {
  const auto s = cs3_cp(42);
  const CocycleReference ref(s.phi);
  const auto f = piecewise({{0.5, vec({Complex(0.5, 0.2)})}, {0.5, vec({Complex(-0.3, 0.4)})}});
  const auto g = piecewise({{0.25, vec({0.7})}, {0.75, vec({Complex(0.1, -0.6)})}});

  SUBCASE("t = 0 gives ε times the overlap") {
    const auto w = ref.matrix_elements(f, g, 0.0);
    for (Index i = 0; i < s.b->dim(); ++i) CHECK(std::abs(w(i) - s.b->counit(i) * exponential_overlap(f, g)) < 1e-15);
  }
  SUBCASE("constant functions: one semigroup element") {
    const Vector c = vec({Complex(0.2, 0.1)}), d = vec({Complex(-0.4, 0.3)});
    const auto fc = StepFunction::constant(c, 1.0), gc = StepFunction::constant(d, 1.0);
    const auto w = ref.matrix_elements(fc, gc, 0.6);
    const auto lam = ref.semigroup(c, d, 0.6);
    const Complex tail = std::exp(0.4 * std::conj(c(0)) * d(0));
    for (Index i = 0; i < s.b->dim(); ++i) CHECK(std::abs(w(i) - lam(i) * tail) < 1e-14);
    const auto taylor = oracle::taylor_exp(*s.b, assoc_generator(s.phi, c, d).values, 0.6);
    CHECK((lam.values - taylor).norm() < 1e-12);
  }
  SUBCASE("splitting an interval does not change the result") {
    const auto split = piecewise({{0.2, vec({Complex(0.5, 0.2)})}, {0.3, vec({Complex(0.5, 0.2)})},
                                  {0.5, vec({Complex(-0.3, 0.4)})}});
    CHECK((ref.matrix_elements(f, g, 0.8).values - ref.matrix_elements(split, g, 0.8).values).norm() < 1e-13);
  }
  SUBCASE("time order of the intervals") {
    const auto w = ref.matrix_elements(f, g, 1.0);
    const auto l1 = ref.semigroup(f.value_at(0.0), g.value_at(0.0), 0.25);
    const auto l2 = ref.semigroup(f.value_at(0.3), g.value_at(0.3), 0.25);
    const auto l3 = ref.semigroup(f.value_at(0.6), g.value_at(0.6), 0.5);
    const auto want = oracle::convolve(*s.b, oracle::convolve(*s.b, l1.values, l2.values), l3.values);
    CHECK((w.values - want).norm() < 1e-13);
    if (!s.b->is_cocommutative()) {
      const auto swapped = oracle::convolve(*s.b, oracle::convolve(*s.b, l3.values, l2.values), l1.values);
      CHECK((w.values - swapped).norm() > 1e-6);
    }
  }
  SUBCASE("beyond the supports") {
    CHECK_THROWS_AS(ref.matrix_elements(f, g, 1.5), DomainError);
    CHECK_NOTHROW(ref.matrix_elements(f, g, 1.0));
  }
}

TEST_CASE("grouplike closed form") {
  const auto b = fx::gz2();
  Vector xi(2);
  xi << 0.6, Complex(0.2, -0.3);
  const auto phi = build_generator(b, {b->rep, xi, std::nullopt}, fx::counit(*b));
  const CocycleReference ref(phi);
  const Vector c = vec({0.3, Complex(0, 0.2)}), d = vec({Complex(0.1, 0.1), -0.4});
  const auto gen = assoc_generator(phi, c, d);
  const auto lam = ref.semigroup(c, d, 0.7);
  for (Index i = 0; i < 2; ++i) CHECK(std::abs(lam(i) - std::exp(0.7 * gen(i))) < 1e-14);
}

TEST_CASE("hermitian symmetry") {
  const auto s = s3_cp(43);
  const CocycleReference ref(s.phi);
  const auto f = piecewise({{0.5, vec({Complex(0.5, 0.2)})}, {0.5, vec({Complex(-0.3, 0.4)})}});
  const auto g = piecewise({{0.25, vec({0.7})}, {0.75, vec({Complex(0.1, -0.6)})}});
  const auto fg = ref.matrix_elements(f, g, 0.75);
  const auto gf = ref.matrix_elements(g, f, 0.75);
  for (Index i = 0; i < 6; ++i) {
    const Vector star = s.b->star(s.b->basis(i));
    CHECK(std::abs(std::conj(fg(i)) - gf.apply(star)) < 1e-13);
  }
}

TEST_CASE("complete positivity of the cocycle") {
  const auto s = cs3_cp(44);
  const CocycleReference ref(s.phi);
  const std::vector<StepFunction> fs = {
      StepFunction::constant(vec({Complex(0.3, 0.1)}), 1.0),
      piecewise({{0.5, vec({-0.4})}, {0.5, vec({Complex(0.2, 0.5)})}}),
      StepFunction::constant(vec({0.0}), 1.0)};
  const Index n = s.b->dim();
  const Index m = static_cast<Index>(fs.size());
  Matrix gram(m * n, m * n);
  for (Index p = 0; p < m; ++p)
    for (Index q = 0; q < m; ++q) {
      const auto w = ref.matrix_elements(fs[static_cast<std::size_t>(p)], fs[static_cast<std::size_t>(q)], 1.0);
      for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) gram(p * n + i, q * n + j) = w.apply(s.b->star_product(i, j));
    }
  CHECK(min_hermitian_eigenvalue(gram) >= -1e-10);
}

TEST_CASE("semigroup cache is safe under concurrent use") {
  const auto s = s3_cp(45);
  const CocycleReference serial(s.phi), shared(s.phi);
  std::vector<StepFunction> fs;
  for (int k = 0; k < 6; ++k)
    fs.push_back(piecewise({{0.5, vec({Complex(0.1 * k, 0.05)})}, {0.5, vec({Complex(-0.2, 0.1 * k)})}}));
  std::vector<Functional> want;
  for (const auto& f : fs) want.push_back(serial.matrix_elements(f, fs[0], 1.0));

  std::vector<std::thread> threads;
  std::vector<double> worst(8, 0.0);
  for (int th = 0; th < 8; ++th)
    threads.emplace_back([&, th] {
      for (int rep = 0; rep < 5; ++rep)
        for (std::size_t k = 0; k < fs.size(); ++k) {
          const auto got = shared.matrix_elements(fs[(k + static_cast<std::size_t>(th)) % fs.size()], fs[0], 1.0);
          const auto& ref = want[(k + static_cast<std::size_t>(th)) % fs.size()];
          worst[static_cast<std::size_t>(th)] =
              std::max(worst[static_cast<std::size_t>(th)], (got.values - ref.values).norm());
        }
    });
  for (auto& t : threads) t.join();
  for (double w : worst) CHECK(w == 0.0);
  CHECK(shared.cache_size() == serial.cache_size());
  // fs[0] paired with itself on both halves plus one pair per half for the others
  CHECK(serial.cache_size() == 2 + 2 * (fs.size() - 1));
}

TEST_CASE("cross-validation against the walk") {
  SUBCASE("pure gauge ξ = 0: errors decrease") {
    const auto b = fx::gs3();
    std::mt19937_64 rng(46);
    const ImplementingTriple t{fx::conjugated_rep(*b, rng), Vector::Zero(6), Matrix::Identity(6, 1)};
    const auto phi = build_generator(b, t, fx::counit(*b));
    const auto f = StepFunction::constant(vec({Complex(0.5, 0.2)}), 1.0);
    const auto g = piecewise({{0.5, vec({0.7})}, {0.5, vec({Complex(0.1, -0.6)})}});
    const auto rows = cross_validate_against_walk(phi, t, 1, f, g, 1.0, {0.25, 0.125, 0.0625, 0.03125});
    REQUIRE(rows.size() == 4);
    for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k].error < rows[k - 1].error);
    CHECK(rows.back().error < 0.05);
  }
  SUBCASE("a generator from another triple is refused") {
    const auto s = s3_cp(47);
    auto other = s.t;
    other.xi *= 1.5;
    const CocycleReference ref(s.phi);
    const auto f = StepFunction::constant(vec({0.3}), 1.0);
    CHECK_THROWS_AS(compare_with_walk(ref, s.b, other, f, f, 1.0, {0.25}), DomainError);
  }
  SUBCASE("results come back sorted by h, descending") {
    const auto s = s3_cp(48);
    const CocycleReference ref(s.phi);
    const auto f = StepFunction::constant(vec({0.3}), 1.0);
    const auto cmp = compare_with_walk(ref, s.b, s.t, f, f, 1.0, {0.125, 0.5, 0.25});
    REQUIRE(cmp.size() == 3);
    CHECK(cmp[0].h == 0.5);
    CHECK(cmp[2].h == 0.125);
    CHECK(cmp[2].n == 8);
    CHECK(cmp[2].max_error() < cmp[0].max_error());
  }
}

TEST_CASE("one walk cell is ε + h φ_{c,d} to first order") {
  const auto s = s3_cp(49);
  const auto chi = fx::counit(*s.b);
  const Vector c = vec({Complex(0.4, -0.1)}), d = vec({Complex(-0.2, 0.3)});
  const auto gen = assoc_generator(s.phi, c, d);
  // without the <c,d>ε term the limit is wrong
  const RowVector no_shift = gen.values - std::conj(c(0)) * d(0) * s.b->counit;
  std::vector<double> err, err_shifted;
  for (double h : {0.04, 0.02, 0.01, 0.005}) {
    const Vector u = vec({1.0, std::sqrt(h) * c(0)}), v = vec({1.0, std::sqrt(h) * d(0)});
    const auto w = vector_functional(build_walk(s.b, s.t, chi, h), u, v);
    const RowVector slope = (w.values - s.b->counit) / h;
    err.push_back((slope - gen.values).norm());
    err_shifted.push_back((slope - no_shift).norm());
  }
  for (std::size_t k = 1; k < err.size(); ++k) CHECK(err[k - 1] / err[k] == doctest::Approx(2.0).epsilon(0.15));
  CHECK(err_shifted.back() > 0.1);
}

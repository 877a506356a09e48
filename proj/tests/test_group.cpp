#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "qrw/errors.hpp"
#include "qrw/group.hpp"
#include "qrw/linalg.hpp"

using namespace qrw;

TEST_CASE("cyclic groups") {
  const auto z2 = FiniteGroup::cyclic(2);
  CHECK(z2.order() == 2);
  CHECK(z2.identity() == 0);
  CHECK(z2.mult(1, 1) == 0);
  CHECK(z2.label(1) == "u");
  const auto z5 = FiniteGroup::cyclic(5);
  CHECK(z5.is_abelian());
  for (int g = 0; g < 5; ++g) CHECK(z5.mult(g, z5.inverse(g)) == z5.identity());
  CHECK(z5.element_order(2) == 5);
}

TEST_CASE("symmetric group S3") {
  const auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK_FALSE(s3.is_abelian());
  std::multiset<int> orders;
  for (int g = 0; g < 6; ++g) orders.insert(s3.element_order(g));
  CHECK(orders.count(1) == 1);
  CHECK(orders.count(2) == 3);
  CHECK(orders.count(3) == 2);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), AxiomError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}), ParseError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 2, 1, 0}), ParseError);
  // Latin square with identity 0 but not associative (order 5 loop).
  const std::vector<int> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop), AxiomError);
}

TEST_CASE("group file round trip") {
  const auto s3 = FiniteGroup::symmetric(3);
  const auto doc = nlohmann::json{{"order", 6}, {"mult_table", s3.table()}};
  const auto g = FiniteGroup::from_json(doc);
  CHECK(g.table() == s3.table());
  const auto loaded = FiniteGroup::load(std::string(QRW_DATA_DIR) + "/s3_group.json");
  CHECK(loaded.order() == 6);
  CHECK_FALSE(loaded.is_abelian());
}

TEST_CASE("one-dimensional representations") {
  SUBCASE("Z4 has four characters, trivial first") {
    const auto reps = one_dimensional_representations(FiniteGroup::cyclic(4));
    REQUIRE(reps.size() == 4);
    for (auto z : reps.front()) CHECK(std::abs(z - 1.0) < 1e-15);
  }
  SUBCASE("S3 has the trivial and the sign character") {
    const auto s3 = FiniteGroup::symmetric(3);
    const auto reps = one_dimensional_representations(s3);
    REQUIRE(reps.size() == 2);
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h)
        CHECK(std::abs(reps[1][static_cast<std::size_t>(s3.mult(g, h))] -
                       reps[1][static_cast<std::size_t>(g)] * reps[1][static_cast<std::size_t>(h)]) < 1e-14);
  }
}

TEST_CASE("linear algebra helpers") {
  std::mt19937_64 rng(7);
  const Matrix a = fx::random_matrix(2, 3, rng), b = fx::random_matrix(3, 2, rng);
  const Matrix k = kron(a, b);
  CHECK(k.rows() == 6);
  CHECK(std::abs(k(4, 5) - a(1, 2) * b(1, 1)) < 1e-15);

  const Matrix u = fx::random_unitary(4, rng);
  CHECK(std::abs(op_norm(u) - 1.0) < 1e-13);
  CHECK(std::abs(op_norm(3.0 * u) - 3.0) < 1e-12);

  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = -2.0;
  h(1, 1) = 5.0;
  CHECK(min_hermitian_eigenvalue(h) == doctest::Approx(-2.0));
  CHECK(max_hermitian_eigenvalue(h) == doctest::Approx(5.0));

  const Matrix ds = direct_sum(Complex(2.0), Matrix::Identity(2, 2));
  CHECK(ds(0, 0) == Complex(2.0));
  CHECK(ds(2, 2) == Complex(1.0));
  CHECK(ds(0, 1) == Complex(0.0));

  // Tr₁(A ⊗ B) = Tr(A) B
  const Matrix x = fx::random_matrix(3, 3, rng), y = fx::random_matrix(2, 2, rng);
  CHECK(max_abs(partial_trace_first(kron(x, y), 3, 2) - x.trace() * y) < 1e-13);

  const Vector v = fx::random_vector(3, rng), w = fx::random_vector(3, rng);
  CHECK(max_abs(outer(v, w) * w - v) < 1e-14);
}

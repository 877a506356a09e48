#include "doctest.h"
#include "fixtures.hpp"
#include "qrw/errors.hpp"
#include "qrw/json_io.hpp"

using namespace qrw;

namespace {

const std::string data_dir = QRW_DATA_DIR;

double tensor_max_diff(const Tensor3& a, const Tensor3& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace

TEST_CASE("C(Z2) structure") {
  const auto b = fx::cz2();
  CHECK(b->dim() == 2);
  // Δδ_e = δ_e⊗δ_e + δ_u⊗δ_u
  CHECK(b->coproduct(0, 0, 0) == Complex(1.0));
  CHECK(b->coproduct(0, 1, 1) == Complex(1.0));
  CHECK(b->coproduct(0, 0, 1) == Complex(0.0));
  CHECK(b->coproduct(0, 1, 0) == Complex(0.0));
  CHECK(b->counit(0) == Complex(1.0));
  CHECK(b->counit(1) == Complex(0.0));
  CHECK(b->characters.size() == 2);
  CHECK((b->characters.front() - b->counit).norm() == 0.0);
  // δ_g δ_h = [g = h] δ_g
  CHECK(b->product(0, 0, 0) == Complex(1.0));
  CHECK(b->product(0, 1, 0) == Complex(0.0));
  CHECK(b->product(0, 1, 1) == Complex(0.0));
}

TEST_CASE("function algebras: counit law is exact, coassociativity tight") {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(5), FiniteGroup::symmetric(3)}) {
    const auto r = verify_bialgebra(*build_function_algebra(g));
    CHECK(r.residual("counit") == 0.0);
    CHECK(r.residual("coassociativity") < 1e-14);
    CHECK(r.passed(1e-12));
  }
  const auto z2 = verify_bialgebra(*fx::cz2());
  CHECK(z2.max_residual() == 0.0);
}

TEST_CASE("group algebras") {
  SUBCASE("C[Z2]") {
    const auto b = fx::gz2();
    const Vector u2 = b->multiply(b->basis(1), b->basis(1));
    CHECK((u2 - b->basis(0)).norm() == 0.0);
    CHECK(b->counit(0) == Complex(1.0));
    CHECK(b->counit(1) == Complex(1.0));
    CHECK((b->rep[0] - Matrix::Identity(2, 2)).norm() == 0.0);
    Matrix swap = Matrix::Zero(2, 2);
    swap(0, 1) = swap(1, 0) = 1.0;
    CHECK((b->rep[1] - swap).norm() == 0.0);
    CHECK(b->characters.size() == 2);
  }
  SUBCASE("C[S3] is noncommutative") {
    const auto s3 = FiniteGroup::symmetric(3);
    const auto b = build_group_algebra(s3);
    Index t12 = -1, t13 = -1;
    for (int g = 0; g < 6; ++g) {
      if (s3.label(g) == "[213]") t12 = g;
      if (s3.label(g) == "[321]") t13 = g;
    }
    REQUIRE(t12 >= 0);
    REQUIRE(t13 >= 0);
    const Vector ab = b->multiply(b->basis(t12), b->basis(t13));
    const Vector ba = b->multiply(b->basis(t13), b->basis(t12));
    CHECK((ab - ba).norm() > 1.0);
  }
  SUBCASE("Δ is exactly multiplicative on grouplikes") {
    const auto b = fx::gs3();
    for (Index i = 0; i < 6; ++i)
      for (Index j = 0; j < 6; ++j) {
        const Matrix lhs = b->coproduct_of(b->multiply(b->basis(i), b->basis(j)));
        const Matrix di = b->coproduct_of(b->basis(i)), dj = b->coproduct_of(b->basis(j));
        // product on B⊗B: (b_a ⊗ b_c)(b_e ⊗ b_f) = b_a b_e ⊗ b_c b_f
        Matrix rhs = Matrix::Zero(6, 6);
        for (Index a = 0; a < 6; ++a)
          for (Index c = 0; c < 6; ++c)
            for (Index e = 0; e < 6; ++e)
              for (Index f = 0; f < 6; ++f) {
                const Complex w = di(a, c) * dj(e, f);
                if (w == Complex{}) continue;
                rhs += w * b->multiply(b->basis(a), b->basis(e)) * b->multiply(b->basis(c), b->basis(f)).transpose();
              }
        CHECK((lhs - rhs).norm() == 0.0);
      }
    CHECK(verify_bialgebra(*b).max_residual() < 1e-14);
  }
}

TEST_CASE("cocommutativity flag") {
  CHECK(fx::gs3()->is_cocommutative());
  CHECK(fx::gz2()->is_cocommutative());
  CHECK(fx::cz2()->is_cocommutative());
  CHECK_FALSE(fx::cs3()->is_cocommutative());
  CHECK(verify_bialgebra(*fx::cs3()).cocommutative == false);
}

TEST_CASE("faithful representations respect products and involution") {
  for (const auto& b : {fx::cz2(), fx::cs3(), fx::gz2(), fx::gs3()}) {
    const auto r = verify_bialgebra(*b);
    CHECK(r.residual("representation") < 1e-12);
    CHECK(r.residual("involution") < 1e-12);
    CHECK(r.faithfulness > 1e-3);
  }
}

TEST_CASE("corrupted coproduct") {
  auto doc = bialgebra_to_json(*fx::cz2());
  doc["coproduct"][1][0][1] = Json::array({1.1, 0.0});
  const auto corrupted = parse_bialgebra(doc);
  const auto r = verify_bialgebra(corrupted);
  CHECK(r.residual("coassociativity") >= 0.1);
  REQUIRE(r.first_failure(1e-12) != nullptr);
  CHECK(r.first_failure(1e-12)->axiom == "coassociativity");
  try {
    load_bialgebra(doc);
    FAIL("expected an axiom error");
  } catch (const AxiomError& e) {
    CHECK(std::string(e.what()).rfind("coassociativity violated at basis ind", 0) == 0);
  }
  CHECK_THROWS_AS(load_bialgebra_file(data_dir + "/corrupted_coproduct.json"), AxiomError);
}

TEST_CASE("bialgebra files") {
  SUBCASE("C(Z2) file equals the builtin") {
    const auto file = load_bialgebra_file(data_dir + "/function_algebra_z2.json");
    const auto builtin = fx::cz2();
    CHECK(tensor_max_diff(file->product, builtin->product) == 0.0);
    CHECK(tensor_max_diff(file->coproduct, builtin->coproduct) == 0.0);
    CHECK((file->counit - builtin->counit).norm() == 0.0);
  }
  SUBCASE("C[S3] file passes and matches the builtin") {
    const auto file = load_bialgebra_file(data_dir + "/group_algebra_s3.json");
    CHECK(verify_bialgebra(*file).max_residual() < 1e-14);
    CHECK(tensor_max_diff(file->coproduct, fx::gs3()->coproduct) == 0.0);
  }
  SUBCASE("Kac-Paljutkin algebra") {
    const auto kp = load_bialgebra_file(data_dir + "/kac_paljutkin.json");
    CHECK(kp->dim() == 8);
    const auto r = verify_bialgebra(*kp);
    CHECK(r.max_residual() < 1e-12);
    CHECK_FALSE(r.cocommutative);
    CHECK(kp->characters.size() == 4);
    const Vector ab = kp->multiply(kp->basis(5), kp->basis(6));
    const Vector ba = kp->multiply(kp->basis(6), kp->basis(5));
    CHECK((ab - ba).norm() > 1.0);
  }
  SUBCASE("round trip through JSON text") {
    const auto b = fx::gs3();
    const auto again = load_bialgebra(Json::parse(bialgebra_to_json(*b).dump()));
    CHECK(tensor_max_diff(again->product, b->product) == 0.0);
    CHECK(again->labels == b->labels);
  }
}

TEST_CASE("number parsing is exact") {
  CHECK(parse_real(Json("1/3")) == 1.0 / 3.0);
  CHECK(parse_real(Json("-2/7")) == -2.0 / 7.0);
  CHECK(parse_real(Json("0.1")) == 0.1);
  CHECK(parse_real(Json(0.1)) == 0.1);
  CHECK(parse_complex(Json::array({"1/2", "-0.25"})) == Complex(0.5, -0.25));
  CHECK(parse_complex(Json(3)) == Complex(3.0, 0.0));
  CHECK_THROWS_AS(parse_real(Json("abc")), ParseError);
  CHECK_THROWS_AS(parse_real(Json("1/0")), ParseError);
}

TEST_CASE("malformed documents") {
  auto doc = bialgebra_to_json(*fx::cz2());
  doc.erase("coproduct");
  CHECK_THROWS_AS(parse_bialgebra(doc), ParseError);
  auto doc2 = bialgebra_to_json(*fx::cz2());
  doc2["counit"] = Json::array({Json::array({1, 0})});
  CHECK_THROWS_AS(parse_bialgebra(doc2), ParseError);
}

TEST_CASE("operator map serialization") {
  const auto b = fx::gs3();
  std::mt19937_64 rng(3);
  std::vector<Matrix> values;
  for (Index i = 0; i < b->dim(); ++i) values.push_back(fx::random_matrix(2, 2, rng));
  const OperatorMap phi(b, values);
  const auto again = parse_operator_map(Json::parse(operator_map_to_json(phi).dump()), b);
  CHECK(max_difference(phi, again) == 0.0);
}

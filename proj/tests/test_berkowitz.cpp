#include <doctest.h>

#include "pfkit/berkowitz.hpp"
#include "pfkit/combinat.hpp"
#include "pfkit/rng.hpp"

using namespace pfk;

namespace {
const Ring kInt = Ring::integers();
Scalar si(long v) { return Scalar::integer(kInt, v); }
} // namespace

TEST_CASE("pb_matrix on the generic 4x4 blocks") {
  const SkewMatrix g = generic_skew(4);
  const auto b = block_decompose(g);
  const Matrix p = pb_matrix(b.a12, b.r, b.s, b.m);
  REQUIRE(p.rows() == 3);
  REQUIRE(p.cols() == 2);
  CHECK(p.at(1, 1).is_one());
  CHECK(p.at(1, 2).is_zero());
  CHECK(p.at(2, 1).to_string() == "a12");
  CHECK(p.at(2, 2).is_one());
  CHECK(p.at(3, 1).to_string() == "-a13*a24 + a14*a23"); // RJS
  CHECK(p.at(3, 2).to_string() == "a12");
}

TEST_CASE("pb_matrix on J_2 blocks: the zero row kills the lower diagonals") {
  const auto b = block_decompose(make_j(kInt, 2));
  const Matrix p = pb_matrix(b.a12, b.r, b.s, b.m);
  CHECK(p.at(1, 1) == si(1));
  CHECK(p.at(2, 1) == si(1));
  CHECK(p.at(2, 2) == si(1));
  CHECK(p.at(3, 1) == si(0));
  CHECK(p.at(3, 2) == si(1));
}

TEST_CASE("pb_matrix is banded: entry (i,j) = entry (i+1,j+1)") {
  Rng rng(41);
  for (std::size_t dim : {6u, 8u}) {
    const auto b = block_decompose(random_skew(kInt, dim, 9, rng));
    const Matrix p = pb_matrix(b.a12, b.r, b.s, b.m);
    CHECK(p.rows() == dim / 2 + 1);
    CHECK(p.cols() == dim / 2);
    for (std::size_t i = 1; i < p.rows(); ++i)
      for (std::size_t j = 1; j < p.cols(); ++j) CHECK(p.at(i, j) == p.at(i + 1, j + 1));
    for (std::size_t i = 1; i <= p.rows(); ++i)
      for (std::size_t j = i + 1; j <= p.cols(); ++j) CHECK(p.at(i, j).is_zero());
  }
}

TEST_CASE("pfaffian_coeffs base case and the 4x4 trace") {
  const Ring rc = Ring::polynomials({"c"});
  const CoeffSeq base = pfaffian_coeffs(skew_from_upper(rc, 2, {Scalar::variable(rc, 0)}));
  CHECK(base.to_string() == "1, c");

  const CoeffSeq g4 = pfaffian_coeffs(generic_skew(4));
  CHECK(g4.to_string() == "1, a12 + a34, a12*a34 - a13*a24 + a14*a23");

  for (std::size_t n = 1; n <= 5; ++n) CHECK(pfaffian_coeffs(make_j(kInt, n)).constant() == si(1));

  CHECK_THROWS_AS(pfaffian_coeffs(generic_skew(3)), Error);
}

TEST_CASE("pfaffian agrees with the matching oracle") {
  CHECK(pfaffian(SkewMatrix(Matrix(kInt, 0, 0))) == si(1));

  // embedded identity values (-1)^n
  for (std::size_t n = 1; n <= 3; ++n) {
    const Scalar v = pfaffian(embed_for_det(Matrix::identity(kInt, 2 * n)));
    CHECK(v == si(n % 2 == 0 ? 1 : -1));
  }

  Rng rng(42);
  for (int t = 0; t < 10; ++t) {
    const SkewMatrix a = random_skew(kInt, 8, 9, rng);
    CHECK(pfaffian(a) == pf_definition(a));
  }
  // symbolic at dims 2 and 4
  CHECK(pfaffian(generic_skew(2)) == pf_definition(generic_skew(2)));
  CHECK(pfaffian(generic_skew(4)) == pf_definition(generic_skew(4)));
}

TEST_CASE("coefficients decompose into the two pclow-sequence sums") {
  // symbolic at dim 4, random at dim 6
  const SkewMatrix g = generic_skew(4);
  const CoeffSeq pg = pfaffian_coeffs(g);
  CHECK(pg.c[1] == pclow_sum(g, 2, 1) + pclow_sum(g, 2, 3));
  CHECK(pg.c[2] == pclow_sum(g, 4, 1));

  Rng rng(43);
  for (int t = 0; t < 5; ++t) {
    const SkewMatrix a = random_skew(kInt, 6, 5, rng);
    const CoeffSeq p = pfaffian_coeffs(a);
    for (int k = 1; k <= 2; ++k)
      CHECK(p.c[k] == pclow_sum(a, 2 * k, 1) + pclow_sum(a, 2 * k, 3));
    CHECK(p.c[3] == pclow_sum(a, 6, 1));
  }
}

TEST_CASE("coefficients are homogeneous of degree k over the generic matrix") {
  for (std::size_t dim : {4u, 6u}) {
    const CoeffSeq p = pfaffian_coeffs(generic_skew(dim));
    for (std::size_t k = 0; k < p.c.size(); ++k) {
      for (const auto& [e, c] : p.c[k].as_polynomial().terms()) {
        std::uint64_t deg = 0;
        for (auto x : e) deg += x;
        CHECK(deg == k);
      }
    }
  }
}

TEST_CASE("scaling: pf(lambda A) = lambda^n pf(A) with symbolic lambda") {
  for (std::size_t dim : {2u, 4u}) {
    const SkewMatrix a = generic_skew(dim, {"lam"});
    const Scalar lam = Scalar::variable(a.ring(), a.ring().nvars() - 1);
    CHECK(pfaffian(SkewMatrix(a.matrix().scaled(lam))) == scalar_pow(lam, dim / 2) * pfaffian(a));
  }
}

TEST_CASE("transpose twists coefficient signs: r_{n-k} = (-1)^k q_{n-k}") {
  Rng rng(47);
  for (std::size_t dim = 2; dim <= 6; dim += 2) {
    const SkewMatrix a = random_skew(kInt, dim, 9, rng);
    const CoeffSeq q = pfaffian_coeffs(a);
    const CoeffSeq r = pfaffian_coeffs(SkewMatrix(a.matrix().transpose()));
    for (std::size_t k = 0; k < q.c.size(); ++k)
      CHECK(r.c[k] == (k % 2 == 0 ? q.c[k] : -q.c[k]));
  }
  // J_2: coefficients (1,2,1) become (1,-2,1)
  CHECK(pfaffian_coeffs(make_j(kInt, 2)).to_string() == "1, 2, 1");
  CHECK(pfaffian_coeffs(SkewMatrix(make_j(kInt, 2).matrix().transpose())).to_string() == "1, -2, 1");
}

TEST_CASE("char_poly rendering") {
  const Ring ra = Ring::polynomials({"a"});
  CHECK(char_poly(skew_from_upper(ra, 2, {Scalar::variable(ra, 0)})).to_poly_string() == "x + a");
  CHECK(char_poly(make_j(kInt, 2)).to_poly_string() == "x^2 + 2*x + 1");
  CHECK(char_poly(generic_skew(4)).to_poly_string() ==
        "x^2 + (a12 + a34)*x + (a12*a34 - a13*a24 + a14*a23)");
}

TEST_CASE("eval_matrix_poly") {
  const Ring ra = Ring::polynomials({"a"});
  const Scalar a = Scalar::variable(ra, 0);
  // coeffs (1, a) at X = -aI vanish
  const Matrix x = Matrix::identity(ra, 2).scaled(-a);
  CHECK(eval_matrix_poly(CoeffSeq{{Scalar::one(ra), a}}, x).is_zero());

  Rng rng(53);
  const Matrix y = random_square(kInt, 3, 9, rng);
  CHECK(eval_matrix_poly(CoeffSeq{{si(1), si(0)}}, y) == y);
  CHECK(eval_matrix_poly(CoeffSeq{{si(1)}}, y) == Matrix::identity(kInt, 3));
  CHECK_THROWS_AS(eval_matrix_poly(CoeffSeq{{Scalar::one(ra)}}, y), Error);
}

TEST_CASE("berkowitz_det equals the Leibniz oracle") {
  CHECK(berkowitz_det(Matrix::identity(kInt, 5)) == si(1));
  CHECK(berkowitz_det(make_transposition(kInt, 4, 1, 3)) == si(-1));
  CHECK(berkowitz_det(make_transposition(kInt, 4, 1, 3)) == det_leibniz(make_transposition(kInt, 4, 1, 3)));

  Rng rng(59);
  for (std::size_t n = 1; n <= 8; ++n) {
    const Matrix b = random_square(kInt, n, 9, rng);
    CHECK(berkowitz_det(b) == det_leibniz(b));
  }
  const Matrix q = random_square(Ring::rationals(), 5, 5, rng);
  CHECK(berkowitz_det(q) == det_leibniz(q));
  const Matrix zp = random_square(Ring::prime_field(97), 6, 5, rng);
  CHECK(berkowitz_det(zp) == det_leibniz(zp));
  CHECK_THROWS_AS(berkowitz_det(Matrix(kInt, 2, 3)), Error);
}

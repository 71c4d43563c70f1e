#include <doctest.h>

#include "pfkit/combinat.hpp"
#include "pfkit/matrix.hpp"
#include "pfkit/rng.hpp"

using namespace pfk;

namespace {
const Ring kInt = Ring::integers();

Scalar si(long v) { return Scalar::integer(kInt, v); }
} // namespace

TEST_CASE("matrix product basics") {
  Rng rng(1);
  const Matrix x = random_square(kInt, 4, 9, rng);
  CHECK(Matrix::identity(kInt, 4) * x == x);
  CHECK(x * Matrix::identity(kInt, 4) == x);

  const Matrix j1 = make_j(kInt, 1).matrix();
  CHECK(j1 * j1 == -Matrix::identity(kInt, 2));

  // the 1x2 by 2x1 product used by the 4x4 PB trace
  const SkewMatrix g = generic_skew(4);
  const Ring& r = g.ring();
  const auto v = [&](const char* n) { return Scalar::variable(r, r.var_index(n)); };
  Matrix row(r, 1, 2);
  row.set(1, 1, v("a13"));
  row.set(1, 2, v("a14"));
  Matrix col(r, 2, 1);
  col.set(1, 1, -v("a24"));
  col.set(2, 1, v("a23"));
  const Matrix prod = row * col;
  CHECK(prod.at(1, 1).to_string() == "-a13*a24 + a14*a23");

  CHECK_THROWS_AS(row * row, Error);                       // shape mismatch
  CHECK_THROWS_AS(j1 * Matrix(Ring::rationals(), 2, 2), Error); // ring mismatch
}

TEST_CASE("skew_from_upper") {
  const SkewMatrix a = skew_from_upper(kInt, 2, {si(7)});
  CHECK(a.at(1, 2) == si(7));
  CHECK(a.at(2, 1) == si(-7));
  CHECK(a.at(1, 1).is_zero());

  const SkewMatrix blocks = skew_from_upper(kInt, 4, {si(1), si(0), si(0), si(0), si(0), si(1)});
  CHECK(blocks == make_j(kInt, 2));

  const SkewMatrix g = generic_skew(4);
  CHECK(g.at(1, 2).to_string() == "a12");
  CHECK(g.at(4, 3).to_string() == "-a34");
  CHECK_THROWS_AS(skew_from_upper(kInt, 4, {si(1)}), Error);
}

TEST_CASE("make_j satisfies the skew invariants and J^2 = -I") {
  CHECK(make_j(kInt, 1).matrix().at(1, 2) == si(1));
  CHECK(make_j(kInt, 1).matrix().at(2, 1) == si(-1));
  for (std::size_t n = 1; n <= 4; ++n) {
    const Matrix j = make_j(kInt, n).matrix();
    CHECK(j * j == -Matrix::identity(kInt, 2 * n));
  }
}

TEST_CASE("embed_for_det block placement") {
  Matrix one(kInt, 1, 1);
  one.set(1, 1, si(1));
  CHECK(embed_for_det(one) == make_j(kInt, 1));

  const SkewMatrix e = embed_for_det(Matrix::identity(kInt, 2));
  CHECK(e.dim() == 4);
  CHECK(e.at(1, 3) == si(1));
  CHECK(e.at(2, 4) == si(1));
  CHECK(e.at(1, 2).is_zero());
  CHECK(e.at(1, 4).is_zero());
  CHECK(e.at(3, 4).is_zero());

  CHECK_THROWS_AS(embed_for_det(Matrix(kInt, 2, 3)), Error);
}

TEST_CASE("swap_sym is an involution matching transposition conjugation") {
  const SkewMatrix g = generic_skew(4);
  CHECK(swap_sym(swap_sym(g, 1, 2), 1, 2) == g);

  // hand-applied permutation of the index pairs for (1,2)
  const SkewMatrix s = swap_sym(g, 1, 2);
  const auto us = upper_of(s);
  CHECK(us[0].to_string() == "-a12");
  CHECK(us[1].to_string() == "a23");
  CHECK(us[2].to_string() == "a24");
  CHECK(us[3].to_string() == "a13");
  CHECK(us[4].to_string() == "a14");
  CHECK(us[5].to_string() == "a34");

  Rng rng(5);
  for (std::size_t dim = 2; dim <= 6; dim += 2) {
    const SkewMatrix a = random_skew(kInt, dim, 5, rng);
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 1; j <= dim; ++j) {
        if (i == j) continue;
        const Matrix t = make_transposition(kInt, dim, i, j);
        CHECK(swap_sym(a, i, j).matrix() == t.transpose() * a.matrix() * t);
      }
    }
  }
  CHECK_THROWS_AS(swap_sym(g, 1, 1), Error);
  CHECK_THROWS_AS(swap_sym(g, 0, 2), Error);
}

TEST_CASE("minor_pair removes the chosen rows and columns") {
  const SkewMatrix g = generic_skew(4);
  CHECK(minor_pair(g, 1, 2).at(1, 2).to_string() == "a34");
  CHECK(minor_pair(g, 1, 3).at(1, 2).to_string() == "a24");
  CHECK(minor_pair(g, 1, 3) == minor_pair(g, 3, 1));

  const SkewMatrix two = skew_from_upper(kInt, 2, {si(9)});
  CHECK(minor_pair(two, 1, 2).dim() == 0);
  CHECK_THROWS_AS(minor_pair(two, 1, 1), Error);
}

TEST_CASE("scale_sym scales one row/column pair and keeps the diagonal zero") {
  const SkewMatrix c = skew_from_upper(kInt, 2, {si(3)});
  CHECK(scale_sym(c, si(1), 1) == c);
  CHECK(scale_sym(c, si(5), 1).at(1, 2) == si(15));
  CHECK(scale_sym(c, si(5), 1).at(2, 1) == si(-15));

  Rng rng(11);
  const SkewMatrix a = random_skew(kInt, 6, 5, rng);
  CHECK(scale_sym(scale_sym(a, si(2), 3), si(-3), 3) == scale_sym(a, si(-6), 3));
  CHECK_THROWS_AS(scale_sym(a, si(2), 7), Error);
}

TEST_CASE("make_transposition") {
  const Matrix t = make_transposition(kInt, 2, 1, 2);
  CHECK(t.at(1, 2) == si(1));
  CHECK(t.at(2, 1) == si(1));
  CHECK(t.at(1, 1).is_zero());

  const Matrix t23 = make_transposition(kInt, 4, 2, 3);
  CHECK(t23 * t23 == Matrix::identity(kInt, 4));
  CHECK(det_leibniz(t23) == si(-1));
}

TEST_CASE("block_decompose reads off the displayed blocks and partitions A") {
  const SkewMatrix g = generic_skew(4);
  const auto b = block_decompose(g);
  CHECK(b.a12.to_string() == "a12");
  CHECK(b.r.at(1, 1).to_string() == "a13");
  CHECK(b.r.at(1, 2).to_string() == "a14");
  CHECK(b.s.at(1, 1).to_string() == "-a23");
  CHECK(b.s.at(2, 1).to_string() == "-a24");
  CHECK(b.m.at(1, 2).to_string() == "a34");

  const auto jb = block_decompose(make_j(kInt, 2));
  CHECK(jb.a12 == si(1));
  CHECK(jb.r.is_zero());
  CHECK(jb.s.is_zero());
  CHECK(jb.m == make_j(kInt, 1));

  // partition: reassembly reproduces A entry for entry
  Rng rng(3);
  for (std::size_t dim = 4; dim <= 8; dim += 2) {
    const SkewMatrix a = random_skew(kInt, dim, 9, rng);
    const auto d = block_decompose(a);
    Matrix re(kInt, dim, dim);
    re.set(1, 2, d.a12);
    re.set(2, 1, -d.a12);
    for (std::size_t k = 3; k <= dim; ++k) {
      re.set(1, k, d.r.at(1, k - 2));
      re.set(k, 1, -d.r.at(1, k - 2));
      re.set(k, 2, d.s.at(k - 2, 1));
      re.set(2, k, -d.s.at(k - 2, 1));
    }
    for (std::size_t i = 3; i <= dim; ++i)
      for (std::size_t j = 3; j <= dim; ++j) re.set(i, j, d.m.at(i - 2, j - 2));
    CHECK(SkewMatrix(re) == a);
  }
  CHECK_THROWS_AS(block_decompose(skew_from_upper(kInt, 2, {si(1)})), Error);
}

TEST_CASE("skew validation names the offending index pair") {
  Matrix bad(kInt, 3, 3);
  bad.set(1, 2, si(4));
  bad.set(2, 1, si(4)); // should be -4
  try {
    SkewMatrix s(bad);
    FAIL("expected a skew violation");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(1,2)") != std::string::npos);
  }

  Matrix diag(kInt, 2, 2);
  diag.set(2, 2, si(1));
  CHECK_THROWS_AS(SkewMatrix{diag}, Error);
}

TEST_CASE("structural ops always return valid skew matrices") {
  // SkewMatrix's constructor re-validates; these must not throw.
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    const SkewMatrix a = random_skew(kInt, 6, 5, rng);
    CHECK_NOTHROW(swap_sym(a, 2, 5));
    CHECK_NOTHROW(minor_pair(a, 1, 4));
    CHECK_NOTHROW(scale_sym(a, si(-7), 2));
    CHECK_NOTHROW(embed_for_det(a.matrix()));
  }
}

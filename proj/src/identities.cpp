#include "pfkit/identities.hpp"

#include <algorithm>

namespace pfk {

int theta(long k) { return k > 0 ? 1 : 0; }

static Scalar pm_one(const Ring& r, long exponent) {
  return Scalar::integer(r, exponent % 2 == 0 ? 1 : -1);
}

Scalar pce_expand(const SkewMatrix& a, std::size_t i) {
  const std::size_t n = a.dim();
  if (n % 2 != 0 || n < 2)
    throw Error("cofactor expansion needs even dimension >= 2, got " + std::to_string(n));
  if (i < 1 || i > n) throw Error("row index " + std::to_string(i) + " out of range");
  Scalar sum = Scalar::zero(a.ring());
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == i) continue;
    const long e = static_cast<long>(i + j) + theta(static_cast<long>(j) - static_cast<long>(i));
    sum += pm_one(a.ring(), e) * a.at(i, j) * pfaffian(minor_pair(a, i, j));
  }
  return sum;
}

Matrix cofactor_matrix(const SkewMatrix& a) {
  const std::size_t n = a.dim();
  if (n % 2 != 0 || n < 2)
    throw Error("cofactor matrix needs even dimension >= 2, got " + std::to_string(n));
  Matrix out(a.ring(), n, n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      // (A*)_{ij} = atilde_{ji}
      const long e = static_cast<long>(j + i) + theta(static_cast<long>(i) - static_cast<long>(j));
      out.set(i, j, pm_one(a.ring(), e) * pfaffian(minor_pair(a, j, i)));
    }
  }
  return out;
}

Matrix padj(const SkewMatrix& a) {
  const std::size_t dim = a.dim();
  if (dim % 2 != 0 || dim < 2)
    throw Error("Padj needs even dimension >= 2, got " + std::to_string(dim));
  const std::size_t n = dim / 2;
  const Ring& ring = a.ring();
  const Matrix aj = a.matrix() * make_j(ring, n).matrix();
  const CoeffSeq p = pfaffian_coeffs(a);
  // Horner over (p_n, ..., p_1): p.c[0..n-1].
  Matrix acc = Matrix::identity(ring, dim).scaled(p.c[0]);
  for (std::size_t t = 1; t < n; ++t)
    acc = acc * aj + Matrix::identity(ring, dim).scaled(p.c[t]);
  return -(make_j(ring, n).matrix() * acc);
}

Matrix pch_residual(const SkewMatrix& a) {
  const std::size_t dim = a.dim();
  if (dim % 2 != 0 || dim < 2)
    throw Error("PCH residual needs even dimension >= 2, got " + std::to_string(dim));
  const Matrix aj = a.matrix() * make_j(a.ring(), dim / 2).matrix();
  return eval_matrix_poly(char_poly(a), aj);
}

SkewMatrix build_c_ij(const SkewMatrix& a, std::size_t i, std::size_t j) {
  const std::size_t n = a.dim();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw Error("bad border indices (" + std::to_string(i) + "," + std::to_string(j) + ") for dim " +
                std::to_string(n));
  const Ring& ring = a.ring();
  Matrix c(ring, n + 2, n + 2);
  const Scalar one = Scalar::one(ring);
  const Scalar minus_one = Scalar::integer(ring, -1);
  // Row 1 carries e_i, row 2 carries -tf_j (so entry +1 at column j).
  c.set(1, 2 + i, one);
  c.set(2 + i, 1, minus_one);
  c.set(2, 2 + j, one);
  c.set(2 + j, 2, minus_one);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t s = 1; s <= n; ++s) c.set(2 + r, 2 + s, a.at(r, s));
  return SkewMatrix(std::move(c));
}

static std::string matrix_witness(const Matrix& m) { return m.to_string(); }

IdentityReport check_mp(const SkewMatrix& a, const Matrix& b) {
  if (b.rows() != b.cols() || b.rows() != a.dim())
    throw Error("MP check needs B square of dimension " + std::to_string(a.dim()));
  IdentityReport rep;
  rep.identity = "mp";
  rep.dim = a.dim();
  rep.ring = a.ring().to_string();
  const SkewMatrix conj(b.transpose() * a.matrix() * b);
  const Scalar lhs = pfaffian(conj);
  const Scalar rhs = pfaffian(a) * berkowitz_det(b);
  rep.pass = lhs == rhs;
  if (!rep.pass) {
    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    rep.witness = "A=" + matrix_witness(a.matrix()) + " B=" + matrix_witness(b);
  }
  return rep;
}

IdentityReport check_pad(const SkewMatrix& a, const Scalar& lambda) {
  const std::size_t n = a.dim();
  if (n % 2 != 0 || n < 2)
    throw Error("PAD check needs even dimension >= 2, got " + std::to_string(n));
  IdentityReport rep;
  rep.identity = "pad";
  rep.dim = n;
  rep.ring = a.ring().to_string();
  rep.pass = true;
  const Scalar pf = pfaffian(a);

  for (std::size_t i = 1; i <= n && rep.pass; ++i) {
    const Scalar lhs = pfaffian(scale_sym(a, lambda, i));
    const Scalar rhs = lambda * pf;
    if (lhs != rhs) {
      rep.pass = false;
      rep.lhs = lhs.to_string();
      rep.rhs = rhs.to_string();
      rep.witness = "multilinearity at i=" + std::to_string(i) + " A=" + matrix_witness(a.matrix());
    }
  }
  for (std::size_t i = 1; i <= n && rep.pass; ++i) {
    for (std::size_t j = i + 1; j <= n && rep.pass; ++j) {
      const Scalar lhs = pfaffian(swap_sym(a, i, j));
      const Scalar rhs = -pf;
      if (lhs != rhs) {
        rep.pass = false;
        rep.lhs = lhs.to_string();
        rep.rhs = rhs.to_string();
        rep.witness = "alternation at (" + std::to_string(i) + "," + std::to_string(j) + ") A=" +
                      matrix_witness(a.matrix());
      }
    }
  }
  if (rep.pass) {
    const Scalar pfj = pfaffian(make_j(a.ring(), n / 2));
    if (!pfj.is_one()) {
      rep.pass = false;
      rep.lhs = pfj.to_string();
      rep.rhs = "1";
      rep.witness = "identity value pf(J_" + std::to_string(n / 2) + ")";
    }
  }
  return rep;
}

Scalar det_via_pf(const Matrix& a) {
  if (a.rows() != a.cols())
    throw Error("det_via_pf needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()));
  const std::size_t n = a.rows();
  return pm_one(a.ring(), static_cast<long>(n * (n - 1) / 2)) * pfaffian(embed_for_det(a));
}

EmbeddedIdentityValues embedded_identity_values(const Ring& r, std::size_t n) {
  if (n < 1) throw Error("embedded identity values need n >= 1");
  const Matrix id = Matrix::identity(r, 2 * n);
  EmbeddedIdentityValues out{pfaffian(embed_for_det(id)), {}};
  out.vk.reserve(2 * n - 1);
  for (std::size_t k = 1; k < 2 * n; ++k)
    out.vk.push_back(pfaffian(embed_for_det(make_transposition(r, 2 * n, k, k + 1))));
  return out;
}

IdentityReport check_transpose_coeffs(const SkewMatrix& a) {
  if (a.dim() % 2 != 0 || a.dim() < 2)
    throw Error("transpose check needs even dimension >= 2, got " + std::to_string(a.dim()));
  IdentityReport rep;
  rep.identity = "transpose";
  rep.dim = a.dim();
  rep.ring = a.ring().to_string();
  const CoeffSeq q = pfaffian_coeffs(a);
  const CoeffSeq r = pfaffian_coeffs(SkewMatrix(a.matrix().transpose()));
  rep.pass = true;
  for (std::size_t k = 0; k < q.c.size(); ++k) {
    const Scalar expect = k % 2 == 0 ? q.c[k] : -q.c[k];
    if (r.c[k] != expect) {
      rep.pass = false;
      rep.lhs = r.to_string();
      rep.rhs = "signs applied to " + q.to_string();
      rep.witness = "A=" + matrix_witness(a.matrix());
      break;
    }
  }
  return rep;
}

IdentityReport check_cayley(const SkewMatrix& a) {
  if (a.dim() % 2 != 0)
    throw Error("Cayley check needs even dimension, got " + std::to_string(a.dim()));
  IdentityReport rep;
  rep.identity = "cayley";
  rep.dim = a.dim();
  rep.ring = a.ring().to_string();
  const Scalar det = berkowitz_det(a.matrix());
  const Scalar pf = pfaffian(a);
  rep.pass = det == pf * pf;
  if (!rep.pass) {
    rep.lhs = det.to_string();
    rep.rhs = (pf * pf).to_string();
    rep.witness = "A=" + matrix_witness(a.matrix());
  }
  return rep;
}

IdentityReport check_scaling(const SkewMatrix& a, const Scalar& lambda) {
  if (a.dim() % 2 != 0)
    throw Error("scaling check needs even dimension, got " + std::to_string(a.dim()));
  IdentityReport rep;
  rep.identity = "scaling";
  rep.dim = a.dim();
  rep.ring = a.ring().to_string();
  const Scalar lhs = pfaffian(SkewMatrix(a.matrix().scaled(lambda)));
  const Scalar rhs = scalar_pow(lambda, a.dim() / 2) * pfaffian(a);
  rep.pass = lhs == rhs;
  if (!rep.pass) {
    rep.lhs = lhs.to_string();
    rep.rhs = rhs.to_string();
    rep.witness = "lambda=" + lambda.to_string() + " A=" + matrix_witness(a.matrix());
  }
  return rep;
}

std::vector<std::size_t> adjacent_swap_chain(std::size_t i, std::size_t j) {
  if (i == j) throw Error("swap chain needs i != j");
  if (i > j) std::swap(i, j);
  std::vector<std::size_t> chain;
  for (std::size_t k = i; k < j; ++k) chain.push_back(k);
  for (std::size_t k = j - 1; k-- > i;) chain.push_back(k);
  return chain;
}

} // namespace pfk

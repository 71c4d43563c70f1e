#include "pfkit/pairs.hpp"

namespace pfk {

PairBlocks pair_blocks(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim() != b.dim())
    throw Error("pair blocks need equal dimensions, got " + std::to_string(a.dim()) + " and " +
                std::to_string(b.dim()));
  const std::size_t n = a.dim();
  if (n < 2) throw Error("pair blocks need dimension >= 2, got " + std::to_string(n));
  const Ring& ring = a.ring();
  Matrix r(ring, 1, n - 1);
  Matrix s(ring, n - 1, 1);
  Matrix m(ring, n - 1, n - 1);
  Matrix nn(ring, n - 1, n - 1);
  for (std::size_t k = 2; k <= n; ++k) {
    r.set(1, k - 1, a.at(1, k));
    s.set(k - 1, 1, b.at(k, 1)); // row 1 of B equals -tS
  }
  for (std::size_t i = 2; i <= n; ++i)
    for (std::size_t j = 2; j <= n; ++j) {
      m.set(i - 1, j - 1, a.at(i, j));
      nn.set(i - 1, j - 1, b.at(i, j));
    }
  return PairBlocks{std::move(r), SkewMatrix(std::move(m)), std::move(s), SkewMatrix(std::move(nn))};
}

static std::vector<Scalar> col_apply(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Scalar acc = Scalar::zero(m.ring());
    for (std::size_t k = 1; k <= m.cols(); ++k) acc += m.at(i, k) * v[k - 1];
    out.push_back(std::move(acc));
  }
  return out;
}

CoeffSeq pair_coeffs(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim() != b.dim())
    throw Error("pair coefficients need equal dimensions, got " + std::to_string(a.dim()) + " and " +
                std::to_string(b.dim()));
  const std::size_t n = a.dim();
  if (n < 1) throw Error("pair coefficients need dimension >= 1");
  if (a.ring() != b.ring())
    throw Error("ring mismatch: " + a.ring().to_string() + " vs " + b.ring().to_string());
  const Ring& ring = a.ring();

  // Trailing 1x1 pair: q = (1).
  std::vector<Scalar> q{Scalar::one(ring)};
  for (std::size_t d = 2; d <= n; ++d) {
    const std::size_t o = n - d; // offset of the trailing d x d blocks
    const std::size_t m = d / 2;
    // R from A, S from B, (NM) powers applied to S.
    Matrix r(ring, 1, d - 1);
    std::vector<Scalar> t;
    t.reserve(d - 1);
    for (std::size_t k = 2; k <= d; ++k) {
      r.set(1, k - 1, a.at(o + 1, o + k));
      t.push_back(b.at(o + k, o + 1));
    }
    Matrix msub(ring, d - 1, d - 1);
    Matrix nsub(ring, d - 1, d - 1);
    for (std::size_t i = 2; i <= d; ++i)
      for (std::size_t j = 2; j <= d; ++j) {
        msub.set(i - 1, j - 1, a.at(o + i, o + j));
        nsub.set(i - 1, j - 1, b.at(o + i, o + j));
      }
    // Diagonals 1, -RS, -R(NM)S, ..., -R(NM)^{m-1}S.
    std::vector<Scalar> diag;
    diag.reserve(m + 1);
    diag.push_back(Scalar::one(ring));
    for (std::size_t k = 1; k <= m; ++k) {
      Scalar acc = Scalar::zero(ring);
      for (std::size_t j = 1; j <= d - 1; ++j) acc += r.at(1, j) * t[j - 1];
      diag.push_back(-acc);
      if (k < m) t = col_apply(nsub, col_apply(msub, t));
    }
    // Even d: (m+1) x m band times the length-m vector; odd d: (m+1) x (m+1).
    std::vector<Scalar> next;
    next.reserve(m + 1);
    for (std::size_t i = 0; i <= m; ++i) {
      Scalar acc = Scalar::zero(ring);
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (j > i) break;
        if (i - j < diag.size()) acc += diag[i - j] * q[j];
      }
      next.push_back(std::move(acc));
    }
    q = std::move(next);
  }
  return CoeffSeq{std::move(q)};
}

Scalar pair_product(const SkewMatrix& a, const SkewMatrix& b) {
  if (a.dim() != b.dim())
    throw Error("pair product needs equal dimensions, got " + std::to_string(a.dim()) + " and " +
                std::to_string(b.dim()));
  if (a.dim() % 2 != 0)
    throw Error("pair product needs even dimension, got " + std::to_string(a.dim()));
  if (a.dim() == 0) return Scalar::one(a.ring());
  return pair_coeffs(a, b).constant();
}

IdentityReport coincide_with_aj(const SkewMatrix& a) {
  if (a.dim() % 2 != 0)
    throw Error("coincidence check needs even dimension, got " + std::to_string(a.dim()));
  IdentityReport rep;
  rep.identity = "pairs-coincide";
  rep.dim = a.dim();
  rep.ring = a.ring().to_string();
  const CoeffSeq pb = pfaffian_coeffs(a);
  const CoeffSeq pr = pair_coeffs(a, make_j(a.ring(), a.dim() / 2));
  rep.pass = pb == pr;
  if (!rep.pass) {
    rep.lhs = pb.to_string();
    rep.rhs = pr.to_string();
  }
  return rep;
}

} // namespace pfk

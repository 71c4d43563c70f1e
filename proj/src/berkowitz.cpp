#include "pfkit/berkowitz.hpp"

namespace pfk {

std::string CoeffSeq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += c[i].to_string();
  }
  return out;
}

std::string CoeffSeq::to_poly_string() const {
  const std::size_t n = degree();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const std::size_t pow = n - i;
    std::string coeff = c[i].to_string();
    const bool composite = coeff.find(' ') != std::string::npos;
    std::string term;
    if (pow == 0) {
      term = composite ? "(" + coeff + ")" : coeff;
    } else {
      std::string xs = pow == 1 ? "x" : "x^" + std::to_string(pow);
      if (c[i].is_one())
        term = xs;
      else if (composite)
        term = "(" + coeff + ")*" + xs;
      else if (coeff == "-1")
        term = "-" + xs;
      else
        term = coeff + "*" + xs;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

// Applies J (block diagonal of [[0,1],[-1,0]]) to a column vector:
// (Jv)[2i-1] = v[2i], (Jv)[2i] = -v[2i-1].
static std::vector<Scalar> apply_j(const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
    out.push_back(v[i + 1]);
    out.push_back(-v[i]);
  }
  return out;
}

static std::vector<Scalar> apply_matrix(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out;
  out.reserve(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Scalar acc = Scalar::zero(m.ring());
    for (std::size_t k = 1; k <= m.cols(); ++k) acc += m.at(i, k) * v[k - 1];
    out.push_back(std::move(acc));
  }
  return out;
}

static Scalar dot_row(const Matrix& r, const std::vector<Scalar>& v) {
  Scalar acc = Scalar::zero(r.ring());
  for (std::size_t k = 1; k <= r.cols(); ++k) acc += r.at(1, k) * v[k - 1];
  return acc;
}

// Diagonals D_0..D_count of the PB step: 1, a12, RJS, RJ(MJ)S, ...,
// with J*S computed once and (MJ) applied incrementally.
static std::vector<Scalar> pb_diagonals(const Scalar& a12, const Matrix& r, const Matrix& s,
                                        const SkewMatrix& m, std::size_t count) {
  std::vector<Scalar> d;
  d.reserve(count + 1);
  d.push_back(Scalar::one(a12.ring()));
  if (count >= 1) d.push_back(a12);
  if (count >= 2) {
    std::vector<Scalar> t;
    t.reserve(s.rows());
    for (std::size_t i = 1; i <= s.rows(); ++i) t.push_back(s.at(i, 1));
    // t holds (MJ)^{k-2} S; D_k = R . J t
    for (std::size_t k = 2; k <= count; ++k) {
      const std::vector<Scalar> jt = apply_j(t);
      d.push_back(dot_row(r, jt));
      if (k < count) t = apply_matrix(m.matrix(), jt);
    }
  }
  return d;
}

// (banded (rows x cols) matrix with diagonals d) * q, entry (i,j) = d[i-j].
static std::vector<Scalar> banded_apply(const std::vector<Scalar>& d, std::size_t rows,
                                        const std::vector<Scalar>& q, const Ring& ring) {
  std::vector<Scalar> out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Scalar acc = Scalar::zero(ring);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j > i) break;
      const std::size_t k = i - j;
      if (k < d.size()) acc += d[k] * q[j];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

Matrix pb_matrix(const Scalar& a12, const Matrix& r, const Matrix& s, const SkewMatrix& m) {
  const std::size_t md = m.dim();
  if (md % 2 != 0) throw Error("PB block M must have even dimension");
  if (r.rows() != 1 || r.cols() != md || s.cols() != 1 || s.rows() != md)
    throw Error("PB block shapes inconsistent: R is " + std::to_string(r.rows()) + "x" +
                std::to_string(r.cols()) + ", S is " + std::to_string(s.rows()) + "x" +
                std::to_string(s.cols()) + ", M has dim " + std::to_string(md));
  const std::size_t n = md / 2 + 1; // half-dimension of the enclosing matrix
  const auto d = pb_diagonals(a12, r, s, m, n);
  Matrix p(a12.ring(), n + 1, n);
  for (std::size_t i = 1; i <= n + 1; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i >= j && i - j < d.size()) p.set(i, j, d[i - j]);
  return p;
}

CoeffSeq pfaffian_coeffs(const SkewMatrix& a) {
  const std::size_t dim = a.dim();
  if (dim % 2 != 0 || dim < 2)
    throw Error("Pfaffian coefficients need even dimension >= 2, got " + std::to_string(dim));
  const Ring& ring = a.ring();
  const std::size_t n = dim / 2;

  // Trailing 2x2 block: (1, a_{2n-1,2n}).
  std::vector<Scalar> p{Scalar::one(ring), a.at(dim - 1, dim)};
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t o = dim - 2 * k; // offset of the trailing 2k x 2k block
    const Scalar& a12 = a.at(o + 1, o + 2);
    Matrix r(ring, 1, 2 * k - 2);
    Matrix s(ring, 2 * k - 2, 1);
    for (std::size_t t = 3; t <= 2 * k; ++t) {
      r.set(1, t - 2, a.at(o + 1, o + t));
      s.set(t - 2, 1, a.at(o + t, o + 2));
    }
    Matrix msub(ring, 2 * k - 2, 2 * k - 2);
    for (std::size_t i = 3; i <= 2 * k; ++i)
      for (std::size_t j = 3; j <= 2 * k; ++j) msub.set(i - 2, j - 2, a.at(o + i, o + j));
    const auto d = pb_diagonals(a12, r, s, SkewMatrix(std::move(msub)), k);
    p = banded_apply(d, k + 1, p, ring);
  }
  return CoeffSeq{std::move(p)};
}

Scalar pfaffian(const SkewMatrix& a) {
  if (a.dim() % 2 != 0)
    throw Error("Pfaffian needs even dimension, got " + std::to_string(a.dim()));
  if (a.dim() == 0) return Scalar::one(a.ring());
  return pfaffian_coeffs(a).constant();
}

CoeffSeq char_poly(const SkewMatrix& a) { return pfaffian_coeffs(a); }

Matrix eval_matrix_poly(const CoeffSeq& coeffs, const Matrix& x) {
  if (x.rows() != x.cols())
    throw Error("matrix polynomial evaluation needs a square matrix");
  if (coeffs.c.empty()) throw Error("empty coefficient sequence");
  if (coeffs.c.front().ring() != x.ring())
    throw Error("ring mismatch between coefficients and matrix: " +
                coeffs.c.front().ring().to_string() + " vs " + x.ring().to_string());
  Matrix acc = Matrix::identity(x.ring(), x.rows()).scaled(coeffs.c.front());
  for (std::size_t i = 1; i < coeffs.c.size(); ++i)
    acc = acc * x + Matrix::identity(x.ring(), x.rows()).scaled(coeffs.c[i]);
  return acc;
}

// Standard Berkowitz recursion on the trailing blocks; diagonals are
// 1, -a11, -RS, -RMS, -RM^2 S, ...
Scalar berkowitz_det(const Matrix& b) {
  if (b.rows() != b.cols())
    throw Error("determinant needs a square matrix, got " + std::to_string(b.rows()) + "x" +
                std::to_string(b.cols()));
  const Ring& ring = b.ring();
  const std::size_t n = b.rows();
  if (n == 0) return Scalar::one(ring);

  std::vector<Scalar> c{Scalar::one(ring), -b.at(n, n)};
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t o = n - k;
    std::vector<Scalar> d;
    d.reserve(k + 1);
    d.push_back(Scalar::one(ring));
    d.push_back(-b.at(o + 1, o + 1));
    Matrix r(ring, 1, k - 1);
    std::vector<Scalar> t;
    t.reserve(k - 1);
    for (std::size_t j = 2; j <= k; ++j) {
      r.set(1, j - 1, b.at(o + 1, o + j));
      t.push_back(b.at(o + j, o + 1)); // S
    }
    Matrix msub(ring, k - 1, k - 1);
    for (std::size_t i = 2; i <= k; ++i)
      for (std::size_t j = 2; j <= k; ++j) msub.set(i - 1, j - 1, b.at(o + i, o + j));
    for (std::size_t m = 2; m <= k; ++m) {
      d.push_back(-dot_row(r, t));
      if (m < k) t = apply_matrix(msub, t);
    }
    c = banded_apply(d, k + 1, c, ring);
  }
  // det(B) = (-1)^n * constant coefficient of det(xI - B).
  return (n % 2 == 0) ? c.back() : -c.back();
}

} // namespace pfk

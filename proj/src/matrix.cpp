#include "pfkit/matrix.hpp"

namespace pfk {

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(ring_)) {}

Matrix::Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_)
    throw Error("matrix entry count " + std::to_string(e_.size()) + " does not match " +
                std::to_string(rows_) + "x" + std::to_string(cols_));
  for (const auto& s : e_)
    if (s.ring() != ring_)
      throw Error("matrix entry ring mismatch: " + s.ring().to_string() + " vs " + ring_.to_string());
}

Matrix Matrix::identity(const Ring& r, std::size_t n) {
  Matrix m(r, n, n);
  for (std::size_t i = 1; i <= n; ++i) m.set(i, i, Scalar::one(r));
  return m;
}

void Matrix::check_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw Error("index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for " +
                std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  check_index(i, j);
  return e_[(i - 1) * cols_ + (j - 1)];
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
  check_index(i, j);
  if (v.ring() != ring_)
    throw Error("matrix entry ring mismatch: " + v.ring().to_string() + " vs " + ring_.to_string());
  e_[(i - 1) * cols_ + (j - 1)] = std::move(v);
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (ring_ != o.ring_)
    throw Error("ring mismatch in matrix product: " + ring_.to_string() + " vs " + o.ring_.to_string());
  if (cols_ != o.rows_)
    throw Error("shape mismatch in matrix product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                " times " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix p(ring_, rows_, o.cols_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    for (std::size_t j = 1; j <= o.cols_; ++j) {
      Scalar acc = Scalar::zero(ring_);
      for (std::size_t k = 1; k <= cols_; ++k) acc += at(i, k) * o.at(k, j);
      p.set(i, j, std::move(acc));
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw Error("shape or ring mismatch in matrix sum");
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) r.set(i, j, -at(i, j));
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 1; i <= rows_; ++i)
    for (std::size_t j = 1; j <= cols_; ++j) r.set(i, j, s * at(i, j));
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool Matrix::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 1; i <= rows_; ++i) {
    if (i > 1) out += "; ";
    for (std::size_t j = 1; j <= cols_; ++j) {
      if (j > 1) out += ", ";
      out += at(i, j).to_string();
    }
  }
  return out + "]";
}

SkewMatrix::SkewMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols())
    throw Error("skew matrix must be square, got " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
  const std::size_t n = m_.rows();
  for (std::size_t i = 1; i <= n; ++i) {
    if (!m_.at(i, i).is_zero())
      throw Error("not skew-symmetric: nonzero diagonal at (" + std::to_string(i) + "," + std::to_string(i) + ")");
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (m_.at(j, i) != -m_.at(i, j))
        throw Error("not skew-symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

SkewMatrix skew_from_upper(const Ring& r, std::size_t n, const std::vector<Scalar>& upper) {
  if (upper.size() != n * (n - 1) / 2)
    throw Error("upper triangle needs " + std::to_string(n * (n - 1) / 2) + " entries, got " +
                std::to_string(upper.size()));
  Matrix m(r, n, n);
  std::size_t k = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j, ++k) {
      m.set(i, j, upper[k]);
      m.set(j, i, -upper[k]);
    }
  }
  return SkewMatrix(std::move(m));
}

std::vector<Scalar> upper_of(const SkewMatrix& a) {
  std::vector<Scalar> u;
  u.reserve(a.dim() * (a.dim() - 1) / 2);
  for (std::size_t i = 1; i <= a.dim(); ++i)
    for (std::size_t j = i + 1; j <= a.dim(); ++j) u.push_back(a.at(i, j));
  return u;
}

SkewMatrix make_j(const Ring& r, std::size_t n) {
  Matrix m(r, 2 * n, 2 * n);
  for (std::size_t b = 0; b < n; ++b) {
    m.set(2 * b + 1, 2 * b + 2, Scalar::one(r));
    m.set(2 * b + 2, 2 * b + 1, Scalar::integer(r, -1));
  }
  return SkewMatrix(std::move(m));
}

SkewMatrix embed_for_det(const Matrix& a) {
  if (a.rows() != a.cols())
    throw Error("embed_for_det needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()));
  const std::size_t n = a.rows();
  Matrix m(a.ring(), 2 * n, 2 * n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      m.set(i, n + j, a.at(i, j));
      m.set(n + j, i, -a.at(i, j));
    }
  }
  return SkewMatrix(std::move(m));
}

Matrix make_transposition(const Ring& r, std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw Error("transposition index out of range: (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (i == j) throw Error("transposition needs i != j");
  Matrix m = Matrix::identity(r, n);
  m.set(i, i, Scalar::zero(r));
  m.set(j, j, Scalar::zero(r));
  m.set(i, j, Scalar::one(r));
  m.set(j, i, Scalar::one(r));
  return m;
}

static void check_pair(const SkewMatrix& a, std::size_t i, std::size_t j) {
  if (i < 1 || i > a.dim() || j < 1 || j > a.dim())
    throw Error("index pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for dim " +
                std::to_string(a.dim()));
  if (i == j) throw Error("index pair needs i != j, got i = j = " + std::to_string(i));
}

SkewMatrix swap_sym(const SkewMatrix& a, std::size_t i, std::size_t j) {
  check_pair(a, i, j);
  const std::size_t n = a.dim();
  const auto map = [&](std::size_t k) { return k == i ? j : (k == j ? i : k); };
  Matrix m(a.ring(), n, n);
  for (std::size_t r = 1; r <= n; ++r)
    for (std::size_t c = 1; c <= n; ++c) m.set(r, c, a.at(map(r), map(c)));
  return SkewMatrix(std::move(m));
}

SkewMatrix minor_pair(const SkewMatrix& a, std::size_t i, std::size_t j) {
  check_pair(a, i, j);
  const std::size_t n = a.dim();
  std::vector<std::size_t> keep;
  keep.reserve(n - 2);
  for (std::size_t k = 1; k <= n; ++k)
    if (k != i && k != j) keep.push_back(k);
  Matrix m(a.ring(), n - 2, n - 2);
  for (std::size_t r = 0; r < keep.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) m.set(r + 1, c + 1, a.at(keep[r], keep[c]));
  return SkewMatrix(std::move(m));
}

SkewMatrix scale_sym(const SkewMatrix& a, const Scalar& lambda, std::size_t i) {
  if (i < 1 || i > a.dim())
    throw Error("index " + std::to_string(i) + " out of range for dim " + std::to_string(a.dim()));
  const std::size_t n = a.dim();
  Matrix m(a.ring(), n, n);
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t c = 1; c <= n; ++c) {
      if (r == c) continue; // diagonal stays zero (lambda^2 * 0)
      Scalar v = a.at(r, c);
      if (r == i) v = lambda * v;
      if (c == i) v = lambda * v;
      m.set(r, c, std::move(v));
    }
  }
  return SkewMatrix(std::move(m));
}

BlockDecomposition block_decompose(const SkewMatrix& a) {
  const std::size_t n = a.dim();
  if (n < 4 || n % 2 != 0)
    throw Error("block_decompose needs even dimension >= 4, got " + std::to_string(n));
  Matrix r(a.ring(), 1, n - 2);
  Matrix s(a.ring(), n - 2, 1);
  for (std::size_t k = 3; k <= n; ++k) {
    r.set(1, k - 2, a.at(1, k));
    s.set(k - 2, 1, a.at(k, 2)); // row 2 of A equals -tS
  }
  Matrix m(a.ring(), n - 2, n - 2);
  for (std::size_t i = 3; i <= n; ++i)
    for (std::size_t j = 3; j <= n; ++j) m.set(i - 2, j - 2, a.at(i, j));
  return BlockDecomposition{a.at(1, 2), std::move(r), std::move(s), SkewMatrix(std::move(m))};
}

} // namespace pfk

#ifndef PFKIT_MATRIX_HPP
#define PFKIT_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "pfkit/ring.hpp"

namespace pfk {

// Dense matrix over one Scalar ring. Indices in the public API are 1-based
// throughout, matching the conventions of every operation built on top;
// dimensions of 0 are legal (the empty matrix).
class Matrix {
public:
  Matrix(Ring ring, std::size_t rows, std::size_t cols);
  Matrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(const Ring& r, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  // 1-based element access.
  const Scalar& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Scalar v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const; // throws on shape/ring mismatch
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const; // entrywise s*a_ij
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  std::string to_string() const; // rows separated by "; ", for diagnostics

private:
  void check_index(std::size_t i, std::size_t j) const;
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_; // row-major
};

// Square matrix with a_ii = 0 and a_ji = -a_ij, validated on construction.
// Odd dimensions are legal values (the pairs algorithm needs them); the
// Pfaffian-only operations reject them.
class SkewMatrix {
public:
  explicit SkewMatrix(Matrix m); // throws naming the offending 1-based index pair

  std::size_t dim() const { return m_.rows(); }
  const Ring& ring() const { return m_.ring(); }
  const Matrix& matrix() const { return m_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  bool operator==(const SkewMatrix& o) const { return m_ == o.m_; }
  bool operator!=(const SkewMatrix& o) const { return !(*this == o); }

private:
  Matrix m_;
};

// Builds the skew matrix of dimension n from its strict upper triangle in
// row-major order ((1,2),(1,3),...,(n-1,n)).
SkewMatrix skew_from_upper(const Ring& r, std::size_t n, const std::vector<Scalar>& upper);

// Strict upper triangle of A in row-major order.
std::vector<Scalar> upper_of(const SkewMatrix& a);

// J_n: 2n x 2n block diagonal of [[0,1],[-1,0]].
SkewMatrix make_j(const Ring& r, std::size_t n);

// [[0, A],[-tA, 0]] for square A; 2n x 2n skew.
SkewMatrix embed_for_det(const Matrix& a);

// Identity with rows i and j exchanged (its own inverse).
Matrix make_transposition(const Ring& r, std::size_t n, std::size_t i, std::size_t j);

// A[i:j]: rows i,j and columns i,j swapped simultaneously.
SkewMatrix swap_sym(const SkewMatrix& a, std::size_t i, std::size_t j);

// A<i,j>: rows i,j and columns i,j removed. A<i,j> = A<j,i>.
SkewMatrix minor_pair(const SkewMatrix& a, std::size_t i, std::size_t j);

// A(lambda,i): row i and column i multiplied by lambda.
SkewMatrix scale_sym(const SkewMatrix& a, const Scalar& lambda, std::size_t i);

// Blocks of A = [[0, a12, R],[-a12, 0, -tS],[-tR, S, M]]; dim even, >= 4.
struct BlockDecomposition {
  Scalar a12;
  Matrix r; // 1 x (2n-2)
  Matrix s; // (2n-2) x 1, s[k] = A[k+2, 2]
  SkewMatrix m; // trailing principal (2n-2) x (2n-2) block
};
BlockDecomposition block_decompose(const SkewMatrix& a);

} // namespace pfk

#endif

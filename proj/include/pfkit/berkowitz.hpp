#ifndef PFKIT_BERKOWITZ_HPP
#define PFKIT_BERKOWITZ_HPP

#include <string>
#include <vector>

#include "pfkit/matrix.hpp"

namespace pfk {

// Coefficient vector in descending degree: c[0] is the leading coefficient.
// Holds Pfaffian coefficients (p_n,...,p_0), pair coefficients (q_m,...,q_0)
// and the characteristic-polynomial view of either.
struct CoeffSeq {
  std::vector<Scalar> c;

  std::size_t degree() const { return c.size() - 1; }
  const Scalar& leading() const { return c.front(); }
  const Scalar& constant() const { return c.back(); }
  bool operator==(const CoeffSeq& o) const { return c == o.c; }
  bool operator!=(const CoeffSeq& o) const { return !(*this == o); }

  std::string to_string() const; // "1, a12 + a34, ..."
  // Rendering as a polynomial in x, descending powers; composite
  // coefficients are parenthesized.
  std::string to_poly_string() const;
};

// The (n+1) x n banded matrix of the Pfaffian-Berkowitz step: constant
// diagonals 1, a12, RJS, RJ(MJ)S, ..., RJ(MJ)^{n-2}S (J sized to M).
Matrix pb_matrix(const Scalar& a12, const Matrix& r, const Matrix& s, const SkewMatrix& m);

// Pfaffian coefficient sequence (p_n,...,p_0) of an even-dimensional skew
// matrix, computed iteratively from the trailing 2x2 block outward.
CoeffSeq pfaffian_coeffs(const SkewMatrix& a);

// p_0 of pfaffian_coeffs; the 0x0 matrix has Pfaffian 1.
Scalar pfaffian(const SkewMatrix& a);

// Pfaffian characteristic polynomial: the same coefficients read as
// Phi_A(x) = p_n x^n + ... + p_0.
CoeffSeq char_poly(const SkewMatrix& a);

// Horner evaluation sum c_i X^i with X^0 = I.
Matrix eval_matrix_poly(const CoeffSeq& coeffs, const Matrix& x);

// Division-free determinant via the Berkowitz characteristic polynomial.
Scalar berkowitz_det(const Matrix& b);

} // namespace pfk

#endif

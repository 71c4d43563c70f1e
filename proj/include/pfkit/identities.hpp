#ifndef PFKIT_IDENTITIES_HPP
#define PFKIT_IDENTITIES_HPP

#include <vector>

#include "pfkit/berkowitz.hpp"
#include "pfkit/matrix.hpp"
#include "pfkit/report.hpp"

namespace pfk {

// Heaviside step: 1 for k > 0, 0 for k < 0 (never called at 0).
int theta(long k);

// Cofactor expansion along row i:
// sum over j != i of (-1)^{i+j+theta(j-i)} a_ij pf(A<i,j>).
Scalar pce_expand(const SkewMatrix& a, std::size_t i);

// A*: (A*)_{ij} = atilde_{ji} with atilde_{ij} = (-1)^{i+j+theta(j-i)} pf(A<i,j>),
// zero diagonal. Satisfies A A* = pf(A) I.
Matrix cofactor_matrix(const SkewMatrix& a);

// Padj(A) = -J((AJ)^{n-1} + p_{n-1}(AJ)^{n-2} + ... + p_1 I).
Matrix padj(const SkewMatrix& a);

// Phi_A(AJ); the Pfaffian Cayley-Hamilton theorem says this is 0.
Matrix pch_residual(const SkewMatrix& a);

// The bordered matrix [[0,0,e_i],[0,0,-tf_j],[-te_i,f_j,A]] whose Pfaffian
// equals Padj(A)_{ij}.
SkewMatrix build_c_ij(const SkewMatrix& a, std::size_t i, std::size_t j);

// pf(tB A B) = pf(A) det(B), both sides computed independently.
IdentityReport check_mp(const SkewMatrix& a, const Matrix& b);

// The three axiomatic-definition checks: multilinearity in every row/column
// pair (with the supplied lambda), alternation for every pair i < j, and the
// value pf(J_n) = 1.
IdentityReport check_pad(const SkewMatrix& a, const Scalar& lambda);

// det(A) = (-1)^{n(n-1)/2} pf([[0,A],[-tA,0]]).
Scalar det_via_pf(const Matrix& a);

// Pfaffians of the embedded identity and of each embedded row-swapped
// identity I[k], for I of dimension 2n.
struct EmbeddedIdentityValues {
  Scalar v0; // contract: (-1)^n
  std::vector<Scalar> vk; // contract: (-1)^{n+1}, k = 1..2n-1
};
EmbeddedIdentityValues embedded_identity_values(const Ring& r, std::size_t n);

// Coefficients of tA against the sign-twisted coefficients of A:
// r_{n-k} = (-1)^k q_{n-k}.
IdentityReport check_transpose_coeffs(const SkewMatrix& a);

// Cayley: det(A) = pf(A)^2, determinant via Berkowitz.
IdentityReport check_cayley(const SkewMatrix& a);

// pf(lambda A) = lambda^n pf(A).
IdentityReport check_scaling(const SkewMatrix& a, const Scalar& lambda);

// The adjacent-transposition chain realizing the swap (i j):
// k_1,...,k_{2l-1} with A[i:j] = tI_{k_1}...A...I_{k_{2l-1}}, each k meaning
// the transposition (k, k+1). The chain length is odd.
std::vector<std::size_t> adjacent_swap_chain(std::size_t i, std::size_t j);

} // namespace pfk

#endif

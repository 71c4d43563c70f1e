#ifndef PFKIT_PAIRS_HPP
#define PFKIT_PAIRS_HPP

#include "pfkit/berkowitz.hpp"
#include "pfkit/matrix.hpp"
#include "pfkit/report.hpp"

namespace pfk {

// Blocks of A = [[0, R],[-tR, M]] and B = [[0, -tS],[S, N]].
struct PairBlocks {
  Matrix r; // 1 x (n-1), row 1 of A
  SkewMatrix m; // trailing (n-1) block of A
  Matrix s; // (n-1) x 1, column 1 of B
  SkewMatrix n; // trailing (n-1) block of B
};
PairBlocks pair_blocks(const SkewMatrix& a, const SkewMatrix& b);

// P-coefficients (q_m,...,q_0), m = floor(n/2), computed level by level from
// the trailing 1x1 pair up to (A,B). For even n, q_0 = pf(A) pf(B); odd
// dimensions run the same recursion but carry no such contract.
CoeffSeq pair_coeffs(const SkewMatrix& a, const SkewMatrix& b);

// q_0 of pair_coeffs; requires equal even dimensions.
Scalar pair_product(const SkewMatrix& a, const SkewMatrix& b);

// Checks q_A = q_{A,J} entrywise: the PB coefficients of A against the pair
// coefficients of (A, J_n).
IdentityReport coincide_with_aj(const SkewMatrix& a);

} // namespace pfk

#endif

#ifndef PFKIT_COMBINAT_HPP
#define PFKIT_COMBINAT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "pfkit/matrix.hpp"

namespace pfk {

// Default brute-force bounds (matrix dimension). Enumeration-backed oracles
// refuse larger inputs instead of silently degrading.
inline constexpr int kMatchingBound = 12;
inline constexpr int kLeibnizBound = 8;
inline constexpr int kPclowDimBound = 6;
inline constexpr int kPclowLenBound = 6;

// Canonical perfect matching of [2n]: pairs (s(2k-1), s(2k)) with
// s(2k-1) < s(2k) and s(1) < s(3) < ... < s(2n-1).
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// (2n-1)!!
std::uint64_t matching_count(std::size_t half_n);

// All canonical matchings of [2n]; half_n = 0 gives the single empty matching.
std::vector<Matching> enumerate_matchings(std::size_t half_n);

// Sign of the permutation (s(1), s(2), ..., s(2n)); returns +1 or -1.
int matching_sign(const Matching& m);

// Ground-truth Pfaffian: signed matching sum. The parallel kernel and the
// serial reference compute the identical exact value; both throw on odd
// dimension or dim > max_dim.
Scalar pf_definition(const SkewMatrix& a, int max_dim = kMatchingBound);
Scalar pf_definition_serial(const SkewMatrix& a, int max_dim = kMatchingBound);

// Reference determinant: sum over all permutations.
Scalar det_leibniz(const Matrix& a, int max_dim = kLeibnizBound);
Scalar det_leibniz_serial(const Matrix& a, int max_dim = kLeibnizBound);

// A pclow: closed even-length walk, head strictly below every other visited
// vertex, whose edges come in consecutive pairs routed through the canonical
// couple (2j-1,2j). Stored as the full directed edge list.
struct PClow {
  std::vector<std::pair<int, int>> edges;
  int head() const { return edges.front().first; }
  int length() const { return static_cast<int>(edges.size()); }
  int forward_edges() const; // fd: edges (i,j) with i < j
  int backward_edges() const; // bd
};

struct PClowSeq {
  std::vector<PClow> clows;
  int length() const;
};

// All pclows on vertices [lo, hi] with the given head and edge count.
std::vector<PClow> enumerate_pclows(int lo, int hi, int head, int len);

// All pclow sequences on vertices [restrict_from, n] of total length len,
// heads strictly increasing. restrict_from = 1 additionally pins
// head(C_1) = 1 (the definition used by the full Pfaffian sum);
// restrict_from = 3 leaves heads free (the trailing-minor sums need the
// head-5, head-7, ... sequences).
std::vector<PClowSeq> enumerate_pclow_seqs(int n, int len, int restrict_from,
                                           int max_len = kPclowLenBound);

// sign = (-1)^{fd(C)+1}; weight = product of a^+ over edges e1, e3, e5, ...
std::pair<int, Scalar> pclow_sign_weight(const PClow& c, const SkewMatrix& a);
std::pair<int, Scalar> pclow_seq_sign_weight(const PClowSeq& s, const SkewMatrix& a);

// Sum of sign * weight over enumerate_pclow_seqs(a.dim(), len, restrict_from),
// with weights read from a (for restrict_from = 3 this is exactly w_M over the
// trailing minor, since those sequences only touch vertices >= 3).
Scalar pclow_sum(const SkewMatrix& a, int len, int restrict_from);

// Pfaffian via the full-length pclow-sequence sum; equals pf_definition.
Scalar pf_clow(const SkewMatrix& a, int max_dim = kPclowDimBound);

// pf(A) * pf(B) by the matching definition.
Scalar pair_product_oracle(const SkewMatrix& a, const SkewMatrix& b, int max_dim = kMatchingBound);

// Alternating clow: closed even-length walk, head-minimal, no self-loop
// edges; odd-position edges are weighted by A and even-position ones by B.
struct AltClow {
  std::vector<std::pair<int, int>> edges;
  int head() const { return edges.front().first; }
  int length() const { return static_cast<int>(edges.size()); }
};

// All alternating clows on [1, n] with the given edge count.
std::vector<AltClow> enumerate_alt_clows(int n, int len);

// w_{A,B}(C) = a_{e1} b_{e2} a_{e3} b_{e4} ... (signed entries).
Scalar alt_clow_weight(const AltClow& c, const Matrix& a, const Matrix& b);

// Sequence of alternating clows with strictly increasing heads; its head is
// the head of the first clow, its weight the product of clow weights.
struct AltClowSeq {
  std::vector<AltClow> clows;
  int head() const { return clows.front().head(); }
  int length() const;
};

// All alternating clow sequences on [1, n] of total edge count len.
std::vector<AltClowSeq> enumerate_alt_clow_seqs(int n, int len);

Scalar alt_clow_seq_weight(const AltClowSeq& s, const Matrix& a, const Matrix& b);

} // namespace pfk

#endif

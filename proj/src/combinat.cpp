#include "pfkit/combinat.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfk {

// ---------------------------------------------------------------- matchings

std::uint64_t matching_count(std::size_t half_n) {
  std::uint64_t c = 1;
  for (std::size_t k = 1; k <= half_n; ++k) c *= 2 * k - 1;
  return c;
}

int matching_sign(const Matching& m) {
  // inversion parity of the flattened sequence (s(1), s(2), ..., s(2n))
  const auto at = [&](std::size_t i) {
    const auto& p = m.pairs[i / 2];
    return i % 2 == 0 ? p.first : p.second;
  };
  const std::size_t len = 2 * m.pairs.size();
  int inv = 0;
  for (std::size_t i = 0; i < len; ++i)
    for (std::size_t j = i + 1; j < len; ++j)
      if (at(i) > at(j)) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

// suffix[k] = product of the matching radices (2n-1, 2n-3, ..., 1) after
// position k.
static std::vector<std::uint64_t> matching_radix_suffix(std::size_t half_n) {
  std::vector<std::uint64_t> suffix(half_n + 1, 1);
  for (std::size_t k = half_n; k-- > 0;) suffix[k] = suffix[k + 1] * (2 * (half_n - 1 - k) + 1);
  return suffix;
}

// Matchings are indexed in mixed radix (2n-1, 2n-3, ..., 1): digit k picks
// the partner of the smallest unmatched vertex among the remaining ones.
static void matching_from_rank(std::size_t half_n, std::uint64_t rank,
                               const std::vector<std::uint64_t>& suffix,
                               std::vector<std::size_t>& free, Matching& m) {
  free.resize(2 * half_n);
  std::iota(free.begin(), free.end(), 1);
  m.pairs.clear();
  for (std::size_t k = 0; k < half_n; ++k) {
    const std::uint64_t radix = 2 * (half_n - 1 - k) + 1;
    const std::uint64_t digit = (rank / suffix[k + 1]) % radix;
    const std::size_t a = free[0];
    const std::size_t b = free[1 + digit];
    m.pairs.emplace_back(a, b);
    free.erase(free.begin() + 1 + digit);
    free.erase(free.begin());
  }
}

std::vector<Matching> enumerate_matchings(std::size_t half_n) {
  const std::uint64_t total = matching_count(half_n);
  const auto suffix = matching_radix_suffix(half_n);
  std::vector<Matching> out(total);
  std::vector<std::size_t> free;
  for (std::uint64_t r = 0; r < total; ++r) matching_from_rank(half_n, r, suffix, free, out[r]);
  return out;
}

static Scalar matching_term(const Matching& m, const SkewMatrix& a) {
  Scalar w = Scalar::integer(a.ring(), matching_sign(m));
  for (const auto& [i, j] : m.pairs) w *= a.at(i, j);
  return w;
}

static void check_pf_input(const SkewMatrix& a, int max_dim) {
  if (a.dim() % 2 != 0)
    throw Error("Pfaffian needs even dimension, got " + std::to_string(a.dim()));
  if (static_cast<int>(a.dim()) > max_dim)
    throw Error("dimension " + std::to_string(a.dim()) + " exceeds matching oracle bound " +
                std::to_string(max_dim));
}

Scalar pf_definition_serial(const SkewMatrix& a, int max_dim) {
  check_pf_input(a, max_dim);
  const std::size_t half_n = a.dim() / 2;
  Scalar sum = Scalar::zero(a.ring());
  // Recursive enumeration: pair the smallest free vertex with each candidate.
  std::vector<std::size_t> free(2 * half_n);
  std::iota(free.begin(), free.end(), 1);
  Matching m;
  auto rec = [&](auto&& self) -> void {
    if (free.empty()) {
      sum += matching_term(m, a);
      return;
    }
    const std::size_t v = free.front();
    for (std::size_t idx = 1; idx < free.size(); ++idx) {
      const std::size_t u = free[idx];
      m.pairs.emplace_back(v, u);
      std::vector<std::size_t> saved = free;
      free.erase(free.begin() + idx);
      free.erase(free.begin());
      self(self);
      free = std::move(saved);
      m.pairs.pop_back();
    }
  };
  if (half_n == 0) return Scalar::one(a.ring());
  rec(rec);
  return sum;
}

Scalar pf_definition(const SkewMatrix& a, int max_dim) {
  check_pf_input(a, max_dim);
  const std::size_t half_n = a.dim() / 2;
  if (half_n == 0) return Scalar::one(a.ring());
  const std::uint64_t total = matching_count(half_n);
  if (total < 4096) return pf_definition_serial(a, max_dim);

  const auto suffix = matching_radix_suffix(half_n);
#ifdef _OPENMP
  const int nchunks = std::max(1, omp_get_max_threads() * 8);
#else
  const int nchunks = 1;
#endif
  std::vector<Scalar> partial(nchunks, Scalar::zero(a.ring()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < nchunks; ++c) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / nchunks;
    const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / nchunks;
    Scalar acc = Scalar::zero(a.ring());
    std::vector<std::size_t> free;
    Matching m;
    m.pairs.reserve(half_n);
    for (std::uint64_t r = lo; r < hi; ++r) {
      matching_from_rank(half_n, r, suffix, free, m);
      acc += matching_term(m, a);
    }
    partial[c] = std::move(acc);
  }
  Scalar sum = Scalar::zero(a.ring());
  for (auto& p : partial) sum += p;
  return sum;
}

// -------------------------------------------------------------- determinant

static void check_det_input(const Matrix& a, int max_dim) {
  if (a.rows() != a.cols())
    throw Error("determinant needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()));
  if (static_cast<int>(a.rows()) > max_dim)
    throw Error("dimension " + std::to_string(a.rows()) + " exceeds Leibniz oracle bound " +
                std::to_string(max_dim));
}

static int perm_sign(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

Scalar det_leibniz_serial(const Matrix& a, int max_dim) {
  check_det_input(a, max_dim);
  const std::size_t n = a.rows();
  if (n == 0) return Scalar::one(a.ring());
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 1);
  Scalar sum = Scalar::zero(a.ring());
  do {
    Scalar term = Scalar::integer(a.ring(), perm_sign(p));
    for (std::size_t i = 0; i < n; ++i) term *= a.at(i + 1, p[i]);
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

// Permutation from its factorial-base rank; ranks are in lexicographic
// order, so a chunk decodes its first permutation and steps with
// next_permutation from there.
static void perm_from_rank(std::size_t n, std::uint64_t rank, std::vector<std::size_t>& out) {
  std::vector<std::size_t> free(n);
  std::iota(free.begin(), free.end(), 1);
  std::vector<std::uint64_t> fact(n, 1);
  for (std::size_t k = 1; k < n; ++k) fact[k] = fact[k - 1] * k;
  out.clear();
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t block = fact[n - 1 - k];
    const std::uint64_t digit = rank / block;
    rank %= block;
    out.push_back(free[digit]);
    free.erase(free.begin() + digit);
  }
}

Scalar det_leibniz(const Matrix& a, int max_dim) {
  check_det_input(a, max_dim);
  const std::size_t n = a.rows();
  if (n == 0) return Scalar::one(a.ring());
  std::uint64_t total = 1;
  for (std::size_t k = 2; k <= n; ++k) total *= k;
  if (total < 4096) return det_leibniz_serial(a, max_dim);

#ifdef _OPENMP
  const int nchunks = std::max(1, omp_get_max_threads() * 8);
#else
  const int nchunks = 1;
#endif
  std::vector<Scalar> partial(nchunks, Scalar::zero(a.ring()));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int c = 0; c < nchunks; ++c) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / nchunks;
    const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / nchunks;
    Scalar acc = Scalar::zero(a.ring());
    std::vector<std::size_t> p;
    perm_from_rank(n, lo, p);
    for (std::uint64_t r = lo; r < hi; ++r) {
      Scalar term = Scalar::integer(a.ring(), perm_sign(p));
      for (std::size_t i = 0; i < n; ++i) term *= a.at(i + 1, p[i]);
      acc += term;
      std::next_permutation(p.begin(), p.end());
    }
    partial[c] = std::move(acc);
  }
  Scalar sum = Scalar::zero(a.ring());
  for (auto& p : partial) sum += p;
  return sum;
}

// ------------------------------------------------------------------- pclows

static int pair_partner(int v) { return (v % 2 == 1) ? v + 1 : v - 1; }

int PClow::forward_edges() const {
  int fd = 0;
  for (const auto& [i, j] : edges)
    if (i < j) ++fd;
  return fd;
}

int PClow::backward_edges() const { return length() - forward_edges(); }

int PClowSeq::length() const {
  int len = 0;
  for (const auto& c : clows) len += c.length();
  return len;
}

std::vector<PClow> enumerate_pclows(int lo, int hi, int head, int len) {
  if (len < 2 || len % 2 != 0) throw Error("pclow length must be even and positive");
  std::vector<PClow> out;
  if (head < lo || head > hi) return out;
  const int steps = len / 2;
  std::vector<std::pair<int, int>> edges;
  // At pair t we stand at cur; the odd edge goes to any u > head, the even
  // edge is forced to (u, partner(u)); the walk may only re-enter the head
  // on the final even edge.
  auto rec = [&](auto&& self, int cur, int t) -> void {
    for (int u = std::max(lo, head + 1); u <= hi; ++u) {
      if (u == cur) continue; // no self-loop edges
      const int w = pair_partner(u);
      if (w < lo || w > hi) continue;
      if (t == steps) {
        if (w != head) continue;
        edges.emplace_back(cur, u);
        edges.emplace_back(u, w);
        out.push_back(PClow{edges});
        edges.pop_back();
        edges.pop_back();
      } else {
        if (w <= head) continue;
        edges.emplace_back(cur, u);
        edges.emplace_back(u, w);
        self(self, w, t + 1);
        edges.pop_back();
        edges.pop_back();
      }
    }
  };
  rec(rec, head, 1);
  return out;
}

std::vector<PClowSeq> enumerate_pclow_seqs(int n, int len, int restrict_from, int max_len) {
  if (len % 2 != 0) throw Error("pclow sequence length must be even, got " + std::to_string(len));
  if (len > max_len)
    throw Error("pclow sequence length " + std::to_string(len) + " exceeds enumeration bound " +
                std::to_string(max_len));
  if (restrict_from != 1 && restrict_from != 3)
    throw Error("restrict_from must be 1 or 3, got " + std::to_string(restrict_from));
  std::vector<PClowSeq> out;
  if (len == 0) {
    out.push_back(PClowSeq{});
    return out;
  }
  // Heads are necessarily odd (the walk re-enters the head from its partner,
  // which must exceed the head).
  std::vector<PClow> chosen;
  auto rec = [&](auto&& self, int min_head, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(PClowSeq{chosen});
      return;
    }
    for (int h = min_head; h <= n; h += 2) {
      for (int l = 2; l <= remaining; l += 2) {
        for (auto& c : enumerate_pclows(restrict_from, n, h, l)) {
          chosen.push_back(std::move(c));
          self(self, h + 2, remaining - l);
          chosen.pop_back();
        }
      }
      if (restrict_from == 1 && chosen.empty()) return; // head(C_1) = 1 required
    }
  };
  int first_head = restrict_from == 1 ? 1 : 3;
  rec(rec, first_head, len);
  return out;
}

std::pair<int, Scalar> pclow_sign_weight(const PClow& c, const SkewMatrix& a) {
  const int fd = c.forward_edges();
  const int sign = (fd % 2 == 0) ? -1 : 1; // (-1)^{fd+1}
  Scalar w = Scalar::one(a.ring());
  for (std::size_t k = 0; k < c.edges.size(); k += 2) {
    const auto [i, j] = c.edges[k];
    w *= a.at(std::min(i, j), std::max(i, j)); // a+
  }
  return {sign, w};
}

std::pair<int, Scalar> pclow_seq_sign_weight(const PClowSeq& s, const SkewMatrix& a) {
  int sign = 1;
  Scalar w = Scalar::one(a.ring());
  for (const auto& c : s.clows) {
    auto [cs, cw] = pclow_sign_weight(c, a);
    sign *= cs;
    w *= cw;
  }
  return {sign, w};
}

Scalar pclow_sum(const SkewMatrix& a, int len, int restrict_from) {
  Scalar sum = Scalar::zero(a.ring());
  for (const auto& s : enumerate_pclow_seqs(static_cast<int>(a.dim()), len, restrict_from)) {
    auto [sign, w] = pclow_seq_sign_weight(s, a);
    sum += sign > 0 ? w : -w;
  }
  return sum;
}

Scalar pf_clow(const SkewMatrix& a, int max_dim) {
  if (a.dim() % 2 != 0)
    throw Error("Pfaffian needs even dimension, got " + std::to_string(a.dim()));
  if (static_cast<int>(a.dim()) > max_dim)
    throw Error("dimension " + std::to_string(a.dim()) + " exceeds pclow oracle bound " +
                std::to_string(max_dim));
  if (a.dim() == 0) return Scalar::one(a.ring());
  return pclow_sum(a, static_cast<int>(a.dim()), 1);
}

Scalar pair_product_oracle(const SkewMatrix& a, const SkewMatrix& b, int max_dim) {
  if (a.dim() != b.dim())
    throw Error("pair product needs equal dimensions, got " + std::to_string(a.dim()) + " and " +
                std::to_string(b.dim()));
  return pf_definition(a, max_dim) * pf_definition(b, max_dim);
}

// -------------------------------------------------------- alternating clows

std::vector<AltClow> enumerate_alt_clows(int n, int len) {
  if (len < 2 || len % 2 != 0) throw Error("alternating clow length must be even and positive");
  std::vector<AltClow> out;
  std::vector<std::pair<int, int>> edges;
  for (int head = 1; head <= n; ++head) {
    auto rec = [&](auto&& self, int cur, int placed) -> void {
      if (placed == len - 1) {
        if (cur != head) { // closing edge; cur > head holds after any step
          edges.emplace_back(cur, head);
          out.push_back(AltClow{edges});
          edges.pop_back();
        }
        return;
      }
      for (int u = head + 1; u <= n; ++u) {
        if (u == cur) continue;
        edges.emplace_back(cur, u);
        self(self, u, placed + 1);
        edges.pop_back();
      }
    };
    rec(rec, head, 0);
  }
  return out;
}

Scalar alt_clow_weight(const AltClow& c, const Matrix& a, const Matrix& b) {
  Scalar w = Scalar::one(a.ring());
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    const auto [i, j] = c.edges[k];
    w *= (k % 2 == 0) ? a.at(i, j) : b.at(i, j);
  }
  return w;
}

int AltClowSeq::length() const {
  int len = 0;
  for (const auto& c : clows) len += c.length();
  return len;
}

std::vector<AltClowSeq> enumerate_alt_clow_seqs(int n, int len) {
  if (len % 2 != 0) throw Error("alternating clow sequence length must be even");
  std::vector<AltClowSeq> out;
  if (len == 0) {
    out.push_back(AltClowSeq{});
    return out;
  }
  // clows bucketed by head, one bucket set per even length
  std::vector<AltClow> chosen;
  auto rec = [&](auto&& self, int min_head, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(AltClowSeq{chosen});
      return;
    }
    for (int l = 2; l <= remaining; l += 2) {
      for (auto& c : enumerate_alt_clows(n, l)) {
        if (c.head() < min_head) continue;
        chosen.push_back(c);
        self(self, c.head() + 1, remaining - l);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 1, len);
  return out;
}

Scalar alt_clow_seq_weight(const AltClowSeq& s, const Matrix& a, const Matrix& b) {
  Scalar w = Scalar::one(a.ring());
  for (const auto& c : s.clows) w *= alt_clow_weight(c, a, b);
  return w;
}

} // namespace pfk

#ifndef PFKIT_RNG_HPP
#define PFKIT_RNG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pfkit/matrix.hpp"

namespace pfk {

// SplitMix64. Deliberately not std::mt19937 + distributions: those are
// implementation-defined, and report bytes must be identical across
// platforms for the same seed.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish in [lo, hi] (modulo bias is irrelevant here; determinism is
  // the contract).
  long range(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

private:
  std::uint64_t state_;
};

// Stable per-trial seed derivation.
inline std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t trial) {
  Rng r(campaign_seed ^ (0xd1b54a32d192ed03ull * (trial + 1)));
  return r.next();
}

// Random element: integers/rationals bounded by `bound`, field elements
// uniform, polynomial rings get random constants.
Scalar random_scalar(const Ring& r, long bound, Rng& rng);

// Random polynomial with a few terms; for the ring-axiom fuzz checks.
Scalar random_polynomial(const Ring& r, long bound, Rng& rng);

// Random skew matrix: strict upper triangle drawn entrywise.
SkewMatrix random_skew(const Ring& r, std::size_t dim, long bound, Rng& rng);

// Random dense square matrix.
Matrix random_square(const Ring& r, std::size_t n, long bound, Rng& rng);

// Variable name for entry (i,j) of a generic matrix: a12, b34, a3_11, ...
std::string entry_var_name(const std::string& prefix, std::size_t i, std::size_t j);

// The generic skew matrix over Z[a12,...]; extra_vars appends further
// indeterminates (e.g. a scaling lambda) to the ring.
SkewMatrix generic_skew(std::size_t dim, const std::vector<std::string>& extra_vars = {});

// Generic skew A (prefix "a") and generic square B (prefix "b") over one
// common polynomial ring.
struct GenericPair {
  SkewMatrix a;
  Matrix b;
};
GenericPair generic_skew_and_square(std::size_t dim);

} // namespace pfk

#endif

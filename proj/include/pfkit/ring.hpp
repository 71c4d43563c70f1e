#ifndef PFKIT_RING_HPP
#define PFKIT_RING_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "pfkit/error.hpp"
#include "pfkit/report.hpp"

namespace pfk {

enum class RingKind { integers, rationals, prime_field, polynomials };

// One of the four supported exact commutative rings. Cheap to copy; the
// polynomial variable list is shared.
class Ring {
public:
  Ring() : kind_(RingKind::integers) {}

  static Ring integers() { return Ring(); }
  static Ring rationals();
  static Ring prime_field(std::uint64_t p); // p must be prime
  static Ring polynomials(std::vector<std::string> vars);

  // Parses "int" | "rat" | "zp:<p>" | "poly" | "poly:v1,v2,...".
  static Ring parse(const std::string& id);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  const std::vector<std::string>& vars() const;
  std::size_t nvars() const { return vars().size(); }
  // Index of a named variable, or throws.
  std::size_t var_index(const std::string& name) const;

  std::string to_string() const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

private:
  RingKind kind_;
  std::uint64_t p_ = 0;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

// Sparse multivariate polynomial over Z. Terms are kept in graded-lex order
// with the leading term first; no zero coefficients are stored, so equality
// is term-map equality.
class Polynomial {
public:
  using Exp = std::vector<std::uint32_t>;

  struct TermOrder {
    bool operator()(const Exp& a, const Exp& b) const;
  };
  using TermMap = std::map<Exp, mpz_class, TermOrder>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, mpz_class c);
  static Polynomial variable(std::size_t nvars, std::size_t idx);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string(const std::vector<std::string>& names) const;
  static Polynomial parse(const std::vector<std::string>& names, const std::string& s);

private:
  void add_term(const Exp& e, const mpz_class& c); // accumulates, drops zeros
  std::size_t nvars_;
  TermMap terms_;
};

// An element of one of the four rings, tagged with its ring. Mixed-ring
// arithmetic throws. All values are immutable once constructed; operations
// are pure, so Scalars are safe to use from concurrent threads.
class Scalar {
public:
  Scalar() : ring_(Ring::integers()), v_(mpz_class(0)) {}

  static Scalar zero(const Ring& r);
  static Scalar one(const Ring& r);
  // Embeds a machine integer into any of the four rings.
  static Scalar integer(const Ring& r, long v);
  static Scalar from_mpz(const Ring& r, const mpz_class& v);
  // Monomial x_idx of a polynomial ring.
  static Scalar variable(const Ring& r, std::size_t idx);
  static Scalar parse(const Ring& r, const std::string& s);

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

  const mpz_class& as_integer() const;
  const mpq_class& as_rational() const;
  std::uint64_t as_residue() const;
  const Polynomial& as_polynomial() const;

private:
  Scalar(Ring r, std::variant<mpz_class, mpq_class, std::uint64_t, Polynomial> v)
      : ring_(std::move(r)), v_(std::move(v)) {}
  void require_same_ring(const Scalar& o) const;

  Ring ring_;
  std::variant<mpz_class, mpq_class, std::uint64_t, Polynomial> v_;
};

// x^k by binary exponentiation; x^0 = 1.
Scalar scalar_pow(const Scalar& x, unsigned long k);

// Deterministic 64-bit primality test (Miller-Rabin with fixed bases).
bool is_prime_u64(std::uint64_t n);

// Samples random triples and checks commutativity, associativity,
// distributivity and the identity laws; the witness names the failing law
// and triple.
IdentityReport ring_axiom_check(const Ring& r, int samples, std::uint64_t seed);

} // namespace pfk

#endif

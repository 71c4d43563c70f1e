#include "pfkit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pfk {

// ---------------------------------------------------------------- primality

static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Deterministic base set for all 64-bit integers.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// --------------------------------------------------------------------- Ring

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::rationals;
  return r;
}

Ring Ring::prime_field(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 62)) throw Error("prime field modulus out of range: " + std::to_string(p));
  if (!is_prime_u64(p)) throw Error("prime field modulus is not prime: " + std::to_string(p));
  Ring r;
  r.kind_ = RingKind::prime_field;
  r.p_ = p;
  return r;
}

Ring Ring::polynomials(std::vector<std::string> vars) {
  for (const auto& v : vars) {
    if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])))
      throw Error("bad polynomial variable name: '" + v + "'");
    for (char c : v)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
        throw Error("bad polynomial variable name: '" + v + "'");
  }
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw Error("duplicate polynomial variable: " + vars[i]);
  Ring r;
  r.kind_ = RingKind::polynomials;
  r.vars_ = std::make_shared<const std::vector<std::string>>(std::move(vars));
  return r;
}

Ring Ring::parse(const std::string& id) {
  if (id == "int") return integers();
  if (id == "rat") return rationals();
  if (id.rfind("zp:", 0) == 0) {
    const std::string ps = id.substr(3);
    if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos)
      throw Error("bad prime field modulus in ring id '" + id + "'");
    return prime_field(std::stoull(ps));
  }
  if (id == "poly") return polynomials({});
  if (id.rfind("poly:", 0) == 0) {
    std::vector<std::string> vars;
    std::string rest = id.substr(5);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t c = rest.find(',', pos);
      if (c == std::string::npos) c = rest.size();
      vars.push_back(rest.substr(pos, c - pos));
      pos = c + 1;
    }
    return polynomials(std::move(vars));
  }
  throw Error("unknown ring id '" + id + "' (expected int, rat, zp:<p>, or poly[:vars])");
}

static const std::vector<std::string> kNoVars;

const std::vector<std::string>& Ring::vars() const {
  return vars_ ? *vars_ : kNoVars;
}

std::size_t Ring::var_index(const std::string& name) const {
  const auto& vs = vars();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == name) return i;
  throw Error("unknown variable '" + name + "' in ring " + to_string());
}

std::string Ring::to_string() const {
  switch (kind_) {
    case RingKind::integers: return "int";
    case RingKind::rationals: return "rat";
    case RingKind::prime_field: return "zp:" + std::to_string(p_);
    case RingKind::polynomials: {
      std::string s = "poly:";
      const auto& vs = vars();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += vs[i];
      }
      return s;
    }
  }
  return "?";
}

bool Ring::operator==(const Ring& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == RingKind::prime_field) return p_ == o.p_;
  if (kind_ == RingKind::polynomials) {
    if (vars_ == o.vars_) return true;
    return vars() == o.vars();
  }
  return true;
}

// --------------------------------------------------------------- Polynomial

bool Polynomial::TermOrder::operator()(const Exp& a, const Exp& b) const {
  const auto deg = [](const Exp& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
  };
  const std::uint64_t da = deg(a), db = deg(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(std::size_t nvars, mpz_class c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace(Exp(nvars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t idx) {
  if (idx >= nvars) throw Error("polynomial variable index out of range");
  Polynomial p(nvars);
  Exp e(nvars, 0);
  e[idx] = 1;
  p.terms_.emplace(std::move(e), mpz_class(1));
  return p;
}

bool Polynomial::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  return c == 1 && std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

void Polynomial::add_term(const Exp& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(nvars_);
  Exp e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    mpz_class mag = neg ? mpz_class(-c) : c;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += names.at(i);
      if (e[i] > 1) factors += '^' + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

Polynomial Polynomial::parse(const std::vector<std::string>& names, const std::string& s) {
  Polynomial result(names.size());
  std::size_t i = 0;
  const auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  skip_ws();
  if (i == s.size()) throw Error("empty polynomial literal");
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw Error("expected '+' or '-' in polynomial literal: " + s);
    }
    first = false;
    skip_ws();
    mpz_class coeff(1);
    Exp e(names.size(), 0);
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        coeff *= mpz_class(s.substr(i, j - i));
        i = j;
        saw_factor = true;
      } else if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        const std::string name = s.substr(i, j - i);
        i = j;
        std::size_t idx = names.size();
        for (std::size_t k = 0; k < names.size(); ++k)
          if (names[k] == name) { idx = k; break; }
        if (idx == names.size()) throw Error("unknown variable '" + name + "' in polynomial literal");
        std::uint32_t exp = 1;
        skip_ws();
        if (i < s.size() && s[i] == '^') {
          ++i;
          skip_ws();
          std::size_t j2 = i;
          while (j2 < s.size() && std::isdigit(static_cast<unsigned char>(s[j2]))) ++j2;
          if (j2 == i) throw Error("expected exponent after '^' in polynomial literal");
          exp = static_cast<std::uint32_t>(std::stoul(s.substr(i, j2 - i)));
          i = j2;
        }
        e[idx] += exp;
        saw_factor = true;
      } else {
        throw Error("bad factor in polynomial literal: " + s);
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') { ++i; continue; }
      break;
    }
    if (!saw_factor) throw Error("empty term in polynomial literal: " + s);
    if (sign < 0) coeff = -coeff;
    result.add_term(e, coeff);
    skip_ws();
  }
  return result;
}

// ------------------------------------------------------------------- Scalar

Scalar Scalar::zero(const Ring& r) { return integer(r, 0); }
Scalar Scalar::one(const Ring& r) { return integer(r, 1); }

Scalar Scalar::integer(const Ring& r, long v) {
  switch (r.kind()) {
    case RingKind::integers: return Scalar(r, mpz_class(v));
    case RingKind::rationals: return Scalar(r, mpq_class(v));
    case RingKind::prime_field: {
      const std::uint64_t p = r.modulus();
      long m = v % static_cast<long>(p);
      if (m < 0) m += static_cast<long>(p);
      return Scalar(r, static_cast<std::uint64_t>(m));
    }
    case RingKind::polynomials:
      return Scalar(r, Polynomial::constant(r.nvars(), mpz_class(v)));
  }
  throw Error("bad ring kind");
}

Scalar Scalar::from_mpz(const Ring& r, const mpz_class& v) {
  switch (r.kind()) {
    case RingKind::integers: return Scalar(r, v);
    case RingKind::rationals: return Scalar(r, mpq_class(v));
    case RingKind::prime_field: {
      mpz_class m;
      mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), r.modulus());
      return Scalar(r, static_cast<std::uint64_t>(m.get_ui()));
    }
    case RingKind::polynomials:
      return Scalar(r, Polynomial::constant(r.nvars(), v));
  }
  throw Error("bad ring kind");
}

Scalar Scalar::variable(const Ring& r, std::size_t idx) {
  if (r.kind() != RingKind::polynomials) throw Error("variable() requires a polynomial ring");
  return Scalar(r, Polynomial::variable(r.nvars(), idx));
}

Scalar Scalar::parse(const Ring& r, const std::string& s) {
  switch (r.kind()) {
    case RingKind::integers: {
      try {
        return Scalar(r, mpz_class(s));
      } catch (const std::invalid_argument&) {
        throw Error("bad integer literal '" + s + "'");
      }
    }
    case RingKind::rationals: {
      try {
        mpq_class q(s);
        if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
        q.canonicalize();
        return Scalar(r, q);
      } catch (const std::invalid_argument&) {
        throw Error("bad rational literal '" + s + "'");
      }
    }
    case RingKind::prime_field: {
      // Accepts "v" or "v mod p".
      std::string body = s;
      const auto at = s.find(" mod ");
      if (at != std::string::npos) {
        body = s.substr(0, at);
        const std::string ps = s.substr(at + 5);
        if (ps != std::to_string(r.modulus()))
          throw Error("modulus mismatch in '" + s + "' (ring is " + r.to_string() + ")");
      }
      try {
        return from_mpz(r, mpz_class(body));
      } catch (const std::invalid_argument&) {
        throw Error("bad prime field literal '" + s + "'");
      }
    }
    case RingKind::polynomials:
      return Scalar(r, Polynomial::parse(r.vars(), s));
  }
  throw Error("bad ring kind");
}

const mpz_class& Scalar::as_integer() const { return std::get<mpz_class>(v_); }
const mpq_class& Scalar::as_rational() const { return std::get<mpq_class>(v_); }
std::uint64_t Scalar::as_residue() const { return std::get<std::uint64_t>(v_); }
const Polynomial& Scalar::as_polynomial() const { return std::get<Polynomial>(v_); }

bool Scalar::is_zero() const {
  switch (ring_.kind()) {
    case RingKind::integers: return as_integer() == 0;
    case RingKind::rationals: return as_rational() == 0;
    case RingKind::prime_field: return as_residue() == 0;
    case RingKind::polynomials: return as_polynomial().is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (ring_.kind()) {
    case RingKind::integers: return as_integer() == 1;
    case RingKind::rationals: return as_rational() == 1;
    case RingKind::prime_field: return as_residue() == 1 % ring_.modulus();
    case RingKind::polynomials: return as_polynomial().is_one();
  }
  return false;
}

void Scalar::require_same_ring(const Scalar& o) const {
  if (ring_ != o.ring_)
    throw Error("ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::integers: return Scalar(ring_, mpz_class(as_integer() + o.as_integer()));
    case RingKind::rationals: return Scalar(ring_, mpq_class(as_rational() + o.as_rational()));
    case RingKind::prime_field: {
      const std::uint64_t p = ring_.modulus();
      std::uint64_t s = as_residue() + o.as_residue();
      if (s >= p) s -= p;
      return Scalar(ring_, s);
    }
    case RingKind::polynomials: return Scalar(ring_, as_polynomial() + o.as_polynomial());
  }
  throw Error("bad ring kind");
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::integers: return Scalar(ring_, mpz_class(as_integer() - o.as_integer()));
    case RingKind::rationals: return Scalar(ring_, mpq_class(as_rational() - o.as_rational()));
    case RingKind::prime_field: {
      const std::uint64_t p = ring_.modulus();
      const std::uint64_t a = as_residue(), b = o.as_residue();
      return Scalar(ring_, a >= b ? a - b : a + p - b);
    }
    case RingKind::polynomials: return Scalar(ring_, as_polynomial() - o.as_polynomial());
  }
  throw Error("bad ring kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_ring(o);
  switch (ring_.kind()) {
    case RingKind::integers: return Scalar(ring_, mpz_class(as_integer() * o.as_integer()));
    case RingKind::rationals: return Scalar(ring_, mpq_class(as_rational() * o.as_rational()));
    case RingKind::prime_field:
      return Scalar(ring_, mulmod_u64(as_residue(), o.as_residue(), ring_.modulus()));
    case RingKind::polynomials: return Scalar(ring_, as_polynomial() * o.as_polynomial());
  }
  throw Error("bad ring kind");
}

Scalar Scalar::operator-() const {
  switch (ring_.kind()) {
    case RingKind::integers: return Scalar(ring_, mpz_class(-as_integer()));
    case RingKind::rationals: return Scalar(ring_, mpq_class(-as_rational()));
    case RingKind::prime_field: {
      const std::uint64_t p = ring_.modulus();
      const std::uint64_t a = as_residue();
      return Scalar(ring_, a == 0 ? 0 : p - a);
    }
    case RingKind::polynomials: return Scalar(ring_, -as_polynomial());
  }
  throw Error("bad ring kind");
}

bool Scalar::operator==(const Scalar& o) const {
  if (ring_ != o.ring_) return false;
  switch (ring_.kind()) {
    case RingKind::integers: return as_integer() == o.as_integer();
    case RingKind::rationals: return as_rational() == o.as_rational();
    case RingKind::prime_field: return as_residue() == o.as_residue();
    case RingKind::polynomials: return as_polynomial() == o.as_polynomial();
  }
  return false;
}

std::string Scalar::to_string() const {
  switch (ring_.kind()) {
    case RingKind::integers: return as_integer().get_str();
    case RingKind::rationals: {
      const mpq_class& q = as_rational();
      if (q.get_den() == 1) return q.get_num().get_str();
      return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    case RingKind::prime_field:
      return std::to_string(as_residue()) + " mod " + std::to_string(ring_.modulus());
    case RingKind::polynomials: return as_polynomial().to_string(ring_.vars());
  }
  return "?";
}

Scalar scalar_pow(const Scalar& x, unsigned long k) {
  Scalar result = Scalar::one(x.ring());
  Scalar base = x;
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

} // namespace pfk

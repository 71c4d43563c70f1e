#include "pfkit/rng.hpp"

namespace pfk {

Scalar random_scalar(const Ring& r, long bound, Rng& rng) {
  switch (r.kind()) {
    case RingKind::integers:
      return Scalar::integer(r, rng.range(-bound, bound));
    case RingKind::rationals: {
      const long num = rng.range(-bound, bound);
      const long den = rng.range(1, std::max(1l, bound));
      return Scalar::parse(r, std::to_string(num) + "/" + std::to_string(den));
    }
    case RingKind::prime_field:
      return Scalar::integer(r, static_cast<long>(rng.next() % r.modulus()));
    case RingKind::polynomials:
      return Scalar::integer(r, rng.range(-bound, bound));
  }
  throw Error("bad ring kind");
}

Scalar random_polynomial(const Ring& r, long bound, Rng& rng) {
  if (r.kind() != RingKind::polynomials) return random_scalar(r, bound, rng);
  Scalar acc = Scalar::zero(r);
  const long terms = rng.range(0, 3);
  for (long t = 0; t < terms; ++t) {
    Scalar term = Scalar::integer(r, rng.range(-bound, bound));
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      const long e = rng.range(0, 2);
      for (long k = 0; k < e; ++k) term *= Scalar::variable(r, v);
    }
    acc += term;
  }
  return acc;
}

SkewMatrix random_skew(const Ring& r, std::size_t dim, long bound, Rng& rng) {
  std::vector<Scalar> upper;
  upper.reserve(dim * (dim - 1) / 2);
  for (std::size_t k = 0; k < dim * (dim - 1) / 2; ++k) upper.push_back(random_scalar(r, bound, rng));
  return skew_from_upper(r, dim, upper);
}

Matrix random_square(const Ring& r, std::size_t n, long bound, Rng& rng) {
  Matrix m(r, n, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j, random_scalar(r, bound, rng));
  return m;
}

std::string entry_var_name(const std::string& prefix, std::size_t i, std::size_t j) {
  if (i < 10 && j < 10) return prefix + std::to_string(i) + std::to_string(j);
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

SkewMatrix generic_skew(std::size_t dim, const std::vector<std::string>& extra_vars) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= dim; ++i)
    for (std::size_t j = i + 1; j <= dim; ++j) vars.push_back(entry_var_name("a", i, j));
  vars.insert(vars.end(), extra_vars.begin(), extra_vars.end());
  const Ring r = Ring::polynomials(vars);
  std::vector<Scalar> upper;
  upper.reserve(dim * (dim - 1) / 2);
  for (std::size_t v = 0; v < dim * (dim - 1) / 2; ++v) upper.push_back(Scalar::variable(r, v));
  return skew_from_upper(r, dim, upper);
}

IdentityReport ring_axiom_check(const Ring& r, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error("ring_axiom_check needs at least one sample");
  IdentityReport rep;
  rep.identity = "ring-axioms";
  rep.ring = r.to_string();
  rep.seed = seed;
  rep.pass = true;
  Rng rng(seed);
  const Scalar zero = Scalar::zero(r);
  const Scalar one = Scalar::one(r);
  for (int t = 0; t < samples && rep.pass; ++t) {
    const Scalar x = random_polynomial(r, 10, rng);
    const Scalar y = random_polynomial(r, 10, rng);
    const Scalar z = random_polynomial(r, 10, rng);
    const auto fail = [&](const std::string& law, const Scalar& lhs, const Scalar& rhs) {
      rep.pass = false;
      rep.lhs = lhs.to_string();
      rep.rhs = rhs.to_string();
      rep.witness = law + " with x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string();
    };
    if (x + y != y + x) { fail("x+y = y+x", x + y, y + x); break; }
    if (x * y != y * x) { fail("x*y = y*x", x * y, y * x); break; }
    if ((x + y) + z != x + (y + z)) { fail("(x+y)+z = x+(y+z)", (x + y) + z, x + (y + z)); break; }
    if ((x * y) * z != x * (y * z)) { fail("(x*y)*z = x*(y*z)", (x * y) * z, x * (y * z)); break; }
    if (x * (y + z) != x * y + x * z) { fail("x*(y+z) = x*y+x*z", x * (y + z), x * y + x * z); break; }
    if (x + zero != x) { fail("x+0 = x", x + zero, x); break; }
    if (x * one != x) { fail("x*1 = x", x * one, x); break; }
    if (x + (-x) != zero) { fail("x+(-x) = 0", x + (-x), zero); break; }
  }
  return rep;
}

GenericPair generic_skew_and_square(std::size_t dim) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= dim; ++i)
    for (std::size_t j = i + 1; j <= dim; ++j) vars.push_back(entry_var_name("a", i, j));
  for (std::size_t i = 1; i <= dim; ++i)
    for (std::size_t j = 1; j <= dim; ++j) vars.push_back(entry_var_name("b", i, j));
  const Ring r = Ring::polynomials(vars);
  std::size_t v = 0;
  std::vector<Scalar> upper;
  for (std::size_t k = 0; k < dim * (dim - 1) / 2; ++k) upper.push_back(Scalar::variable(r, v++));
  SkewMatrix a = skew_from_upper(r, dim, upper);
  Matrix b(r, dim, dim);
  for (std::size_t i = 1; i <= dim; ++i)
    for (std::size_t j = 1; j <= dim; ++j) b.set(i, j, Scalar::variable(r, v++));
  return GenericPair{std::move(a), std::move(b)};
}

} // namespace pfk

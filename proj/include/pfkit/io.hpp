#ifndef PFKIT_IO_HPP
#define PFKIT_IO_HPP

#include <iosfwd>
#include <string>

#include "pfkit/matrix.hpp"
#include "pfkit/report.hpp"

namespace pfk {

// Text format: first line "n", then n rows of n whitespace-separated scalar
// literals. Carries no ring tag, so the ring comes from the caller; only
// rings whose literals are whitespace-free fit (int, rat, zp as integers).
Matrix read_matrix_text(std::istream& in, const Ring& ring);
std::string matrix_to_text(const Matrix& m);

// JSON format: {"n":..., "ring":"int|rat|zp:<p>|poly:v1,...", and either
// "entries" (n x n, numbers or strings) or "upper" (strict upper triangle,
// row-major)}. A separate "vars" array may replace the poly ring's var list.
Matrix read_matrix_json(const std::string& text);
std::string matrix_to_json(const Matrix& m);

// Reads a matrix file, auto-detecting JSON by a leading '{'.
Matrix read_matrix_file(const std::string& path, const Ring& default_ring);

// Same, then validates skew-symmetry (errors name the offending 1-based pair).
SkewMatrix read_skew_file(const std::string& path, const Ring& default_ring);

// One JSON line with stable key order:
// {identity, pass, dim, ring, seed, lhs, rhs, witness}.
std::string report_to_json(const IdentityReport& r);
std::string report_to_human(const IdentityReport& r);

} // namespace pfk

#endif

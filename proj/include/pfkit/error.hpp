#ifndef PFKIT_ERROR_HPP
#define PFKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pfk {

// Thrown on contract violations: shape/ring mismatches, bad indices,
// malformed input, exceeded brute-force bounds. The CLI maps it to exit 2.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pfk

#endif

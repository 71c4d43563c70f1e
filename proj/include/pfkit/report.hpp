#ifndef PFKIT_REPORT_HPP
#define PFKIT_REPORT_HPP

#include <cstdint>
#include <string>

namespace pfk {

// Outcome of one identity check. pass is true iff the two sides agreed
// exactly in the ring; on failure lhs/rhs carry the mismatching values and
// witness a reparseable description of the offending input.
struct IdentityReport {
  std::string identity;
  bool pass = false;
  std::size_t dim = 0;
  std::string ring;
  std::uint64_t seed = 0;
  std::string lhs;
  std::string rhs;
  std::string witness;
};

} // namespace pfk

#endif

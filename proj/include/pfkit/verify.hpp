#ifndef PFKIT_VERIFY_HPP
#define PFKIT_VERIFY_HPP

#include <iosfwd>
#include <vector>

#include "pfkit/report.hpp"
#include "pfkit/ring.hpp"

namespace pfk {

// One verification campaign. The seed fully determines every generated
// matrix; two runs with the same config produce byte-identical output.
struct RunConfig {
  std::string identity = "all";
  std::size_t dim = 6;
  std::size_t trials = 20;
  Ring ring = Ring::integers();
  long bound = 5;
  std::uint64_t seed = 0;
  bool symbolic = false;
  std::string format = "jsonl"; // or "human"
};

// The identities cmd_verify accepts, in campaign order.
const std::vector<std::string>& verify_identity_names();

// Runs the campaign, streaming one report line per check in trial-ordinal
// order (trials execute on parallel workers). Returns 0 if every check
// passed, 1 otherwise; throws Error on usage problems.
int run_verify(const RunConfig& cfg, std::ostream& out);

} // namespace pfk

#endif

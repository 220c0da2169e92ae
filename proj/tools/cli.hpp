#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddsteps::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,               // success, or CircuitNeighbor for ocnp
  kNotCircuitNeighbor = 1,
  kAlreadyOptimal = 2,
  kNotUnique = 3,
  kInfeasible = 4,
  kUnbounded = 5,
  kIterationCap = 6,
  kVerifyFailed = 7,
  kUsage = 64,
  kDataError = 65,
  kSizeGuard = 66,
  kInternal = 70,
};

/// Runs one command. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddsteps::cli

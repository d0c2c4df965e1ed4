#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atmp::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,  // also: instance or solution violates invariants
  kBadInput = 2,
  kBudgetExhausted = 3,
};

// Runs one command line (args[0] is the program name). Output that is not
// redirected with --out goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace atmp::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flagcalc {

enum ExitCode : int {
  kExitPass = 0,
  kExitFail = 1,
  kExitResource = 2,
  kExitUsage = 3,
  kExitMissingGolden = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` (or the --output file), progress and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagcalc

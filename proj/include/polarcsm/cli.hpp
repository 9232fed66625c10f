#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polarcsm {

enum ExitCode : int {
  kExitOk = 0,
  kExitPipelineFailure = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
  kExitTrialDisagreement = 4,
};

/// Entry point of the command-line tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarcsm

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rothyp::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kToleranceFailure = 2,
  kUsage = 64,
  kMalformedSpec = 65,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

const char* version();

}  // namespace rothyp::cli

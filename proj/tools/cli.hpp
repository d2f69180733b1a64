#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidArgument = 1,
  kOutOfRange = 2,
  kVerificationFailed = 3,
};

// Parses argv (without the program name) and runs one subcommand. Results go
// to `out`; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::cli

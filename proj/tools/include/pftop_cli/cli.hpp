#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pftop::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailed = 1,
  kUsageError = 2,
};

/// Runs the command line tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pftop::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclab::cli {

enum ExitCode : int {
  kExpected = 0,
  kUnexpected = 1,
  kUsage = 2,
  kError = 3,
};

/// Runs one command line. `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cyclab::cli

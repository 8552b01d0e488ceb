#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilfer::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadConfig = 2,
  kOverflow = 3,
};

/// Runs `hilfer-dfc <args...>` (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilfer::cli

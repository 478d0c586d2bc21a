#pragma once

#include <iosfwd>

namespace hypersf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitDomain = 3,
  kExitConvergence = 4,
};

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypersf::cli

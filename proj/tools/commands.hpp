#pragma once

#include <iosfwd>

namespace cbt::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFail = 2, kInternal = 3 };

// Entry point of the cbt tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbt::cli

#pragma once

#include <ostream>

namespace cmpoly {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

// Runs one command line (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cmpoly

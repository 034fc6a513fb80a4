#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surreal::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;           // unexpected failure
inline constexpr int kExitUsage = 2;           // bad arguments, syntax or non-numeric literal
inline constexpr int kExitCounterexample = 3;  // a verified property failed
inline constexpr int kExitIncomplete = 4;      // stopped by a resource limit

// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surreal::cli

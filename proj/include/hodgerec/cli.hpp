#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgerec::cli {

// Exit codes: 0 success, 1 verification/conjecture failure or cache
// integrity error, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (program name excluded) against the given streams.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

// main() adapter.
int run(int argc, const char* const* argv);

}  // namespace hodgerec::cli

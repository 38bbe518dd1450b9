// Command-line front end: gen, cds, run, verify, plot.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification failure.
#pragma once

#include <iosfwd>

namespace cdsbench {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdsbench

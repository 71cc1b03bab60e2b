#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace anonhard::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Exit codes: 0 on
/// success, 1 when a verification report has failed checks, 2 on usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace anonhard::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidqp::cli {

/// Exit codes: 0 quasipositive / success, 1 not quasipositive / check
/// failed, 2 usage or parse error, 3 resource limit ("unknown").
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

/// Runs the command line given the argument list (without the program
/// name).  `in` feeds `verify` its witness JSON when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace braidqp::cli

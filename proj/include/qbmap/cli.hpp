#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbmap::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

/// Entry point of the `qbmap` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace qbmap::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertMismatch = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitUnsupported = 3;

/// Entry point of the `icc` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icc::cli

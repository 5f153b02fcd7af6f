#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stellar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one `stellar` invocation; args excludes the program name. "-" as a
/// file argument reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace stellar::cli

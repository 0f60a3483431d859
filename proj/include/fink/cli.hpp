#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fink::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotFound = 3;
inline constexpr int kExitDomain = 4;

/// Runs the tool on arguments without the program name. JSON goes to out,
/// progress and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fink::cli

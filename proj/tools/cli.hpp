#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adpt::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2 };

/// Parses and runs one adptrack command. Never throws; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adpt::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace btg::cli {

/// Exit codes of the driver.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace btg::cli

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgb::cli {

// Exit statuses: 0 success / domain yes, 1 domain no, 2 usage or validation
// error, 3 size-guard refusal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

// Runs one command; machine output goes to `out`, diagnostics to `err`.
// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgb::cli

#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace aperylab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitPartial = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitInternal = 70;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace aperylab::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tmtrace::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; ///< domain error, or a failed verification
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` as one line of JSON (DOT for `bratteli --dot`); usage text goes
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tmtrace::cli

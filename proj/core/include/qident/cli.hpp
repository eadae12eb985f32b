#pragma once

#include <iosfwd>

namespace qident::cli {

/// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the qident executable. Reports go to out,
/// diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qident::cli

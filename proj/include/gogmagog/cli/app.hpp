#pragma once

#include <ostream>

namespace gogmagog::cli {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

// Entry point of the gogmagog command; writes results to `out` (or --out) and diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gogmagog::cli

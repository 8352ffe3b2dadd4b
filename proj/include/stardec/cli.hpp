#pragma once

// Command-line front end: decompose, embed, family, sweep, bounds.
//
// Exit codes: 0 decision reached, 1 malformed input, 2 search budget exceeded,
// 3 verification failure (refuted claim or cap violation).

#include <cstdint>
#include <optional>
#include <ostream>

namespace stardec {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitVerification = 3;

inline constexpr const char* kBudgetEnv = "STARDEC_BUDGET";

// Flag value if given, else STARDEC_BUDGET if set, else the fallback.
std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, std::uint64_t fallback);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stardec

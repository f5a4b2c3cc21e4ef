#pragma once

#include "saxl/verify.hpp"

#include <ostream>

namespace saxl {

/// 1 for fail, otherwise 0. A counterexample to a conjecture is reported,
/// not treated as a failure.
int exit_code(Status status);

inline constexpr int kExitUsage = 2;
inline constexpr int kExitCorruptCache = 3;

/// Runs the saxl command line. Data goes to `out`, diagnostics to `err`.
/// Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace saxl

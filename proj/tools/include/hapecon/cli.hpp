#pragma once

#include <ostream>

namespace hapecon::cli {

/// Exit codes: 0 success, 1 I/O failure, 2 invalid input or reference,
/// 3 infeasible architecture or exceeded capacity.
enum ExitCode : int { ok = 0, io_failure = 1, invalid_input = 2, infeasible = 3 };

/// Entry point with injectable streams so tests can drive it in-process.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hapecon::cli

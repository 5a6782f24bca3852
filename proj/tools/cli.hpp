#pragma once

#include <iosfwd>

namespace transat::cli {

/// Exit codes: 0 report-only success, 10 SAT, 20 UNSAT, 1 usage or parse
/// error, 2 resource limit.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitLimit = 2;
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace transat::cli

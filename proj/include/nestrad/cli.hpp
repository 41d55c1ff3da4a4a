#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestrad {

// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // reproduce/verify found a mismatch
inline constexpr int kExitDomain = 2;       // DomainError, CatalogMissError
inline constexpr int kExitPrecision = 3;    // PrecisionError, ConvergenceError
inline constexpr int kExitUsage = 64;
inline constexpr int kExitCantCreate = 74;

// args excludes the program name. Reports go to `out` (or --out), diagnostics
// to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestrad

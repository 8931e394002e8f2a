#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lorentz::cli {

inline constexpr const char* kVersion = "0.1.0";
// Environment variable that replaces the pinned tolerances; --tol wins over it.
inline constexpr const char* kTolEnv = "LORENTZ_TOL";

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

// Runs one command. `args` excludes the program name. Reports go to `out`
// (or the --out target), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lorentz::cli

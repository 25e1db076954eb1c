#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lmcost::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitNumericalFailure = 3;

/// Runs one command. `args` excludes the program name. Data goes to `out`
/// (or the file named by --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lmcost::cli

#ifndef LATPATH_CLI_HPP
#define LATPATH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace latpath::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (program name excluded). Output goes to `out`
/// unless --out names a file; diagnostics and usage text go to `err`.
/// Returns 0 on success or PASS, 1 on a failed verification, 2 on a usage
/// or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpath::cli

#endif  // LATPATH_CLI_HPP

#ifndef RSBF_CLI_HPP
#define RSBF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rsbf::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceError = 3,
};

/// Runs the command line `args` (without the program name). Rendered results
/// go to `out`; diagnostics, warnings and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsbf::cli

#endif  // RSBF_CLI_HPP

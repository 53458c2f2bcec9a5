#ifndef QUIVERTILT_TOOLS_CLI_HPP
#define QUIVERTILT_TOOLS_CLI_HPP

#include <ostream>

namespace quivertilt::tools {

enum ExitCode { kOk = 0, kDomain = 1, kUsage = 2 };

// Whole command line in, exit code out. Reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quivertilt::tools

#endif  // QUIVERTILT_TOOLS_CLI_HPP

#ifndef BIHEYT_CLI_HPP
#define BIHEYT_CLI_HPP

#include <iosfwd>

namespace biheyt::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kSizeGuard = 2, kUsage = 3 };

/// Runs one command line; results go to `out` (or --output), errors to `err`
/// as a JSON object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace biheyt::cli

#endif

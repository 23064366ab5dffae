#pragma once

#include <iosfwd>

namespace polynorm::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kSearchCap = 3,
  kPrecondition = 4,
  kInternal = 5,
};

/// Runs one command. The JSON result goes to `out` (or to --out); failures
/// are reported as {"error": code, "message": text} on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polynorm::cli

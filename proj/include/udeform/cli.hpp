#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udeform::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  /// Malformed input, domain violation, unknown property.
  kBadInput = 1,
  /// Parameter matrix with qs - rp = 0.
  kDegenerate = 2,
  /// Series did not stabilize, or the term source ran out.
  kUnstable = 3,
  /// A proved property failed during `check`.
  kViolation = 4,
};

/// Runs the command line `args` (without the program name), writing the
/// document to `out` and diagnostics to `err`. Reads UDEFORM_MAX_ORDER.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udeform::cli

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsbstego::cli {

/// Process exit statuses. Stable; documented in the README.
enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kCapacityExceeded = 2,
  kCodecError = 3,
  kNotAStegoImage = 4,
  kCorruptHeader = 5,
  kUnsafeName = 6,
  kDimensionMismatch = 7,
  kUsageError = 8,
};

/// Runs one command line. `args` excludes the program name. Reports are
/// written to `out` as `key: value` lines, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// True if an embedded name can be written as a single file inside a
/// directory: non-empty, not "." or "..", no '/', '\\' or NUL bytes.
bool is_safe_name(const std::string& name);

}  // namespace lsbstego::cli

#pragma once

#include <ostream>

namespace conesep::cli {

enum ExitCode : int {
  kSeparated = 0,
  kNotSeparated = 1,
  kInconclusive = 2,
  kParseError = 3,
  kSchemaError = 4,
  kEngineError = 5,
};

/// Entry point of the conesep tool. Documents go to `out` (or --output),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace conesep::cli

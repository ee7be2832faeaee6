#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normbasis::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCheckFailed = 2,  // certified FAIL of a checked inequality, or --verify mismatch
  kNotGalois = 3,
};

/// Runs one command; args excludes the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normbasis::cli

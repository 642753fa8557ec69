#pragma once

namespace paircorr::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kNumericalFailure = 3,
};

int run(int argc, char **argv);

} // namespace paircorr::cli

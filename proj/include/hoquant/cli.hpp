#pragma once

namespace hoquant::cli {

/// Exit codes: 0 success, 1 assertion failure, 2 usage or configuration error.
enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsageError = 2 };

/// Entry point of the `hoquant` command-line tool.
int run(int argc, const char* const* argv);

}  // namespace hoquant::cli

#pragma once

// Command-line entry point.  Returns the process exit code:
//   0 success, 1 internal verification failure, 2 usage/parse error,
//   3 search exhausted.

namespace r1 {

int run_cli(int argc, const char* const* argv);

}  // namespace r1

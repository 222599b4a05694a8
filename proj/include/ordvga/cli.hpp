#pragma once

#include <iosfwd>

namespace ordvga {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitComputation = 2,
  kExitUsage = 64,
  kExitIo = 74,
};

// Entry point of the ordvga tool. Subcommands:
//   validate <matrix.csv>
//   assess <matrix.csv> [--out report.json] [--plots dir] [--table]
//   rank <matrix.csv> [--rounds k] [--out report.json]
//   plot <matrix.csv> --dmu <name> --stage <1|2> [--out file.svg]
// Results go to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordvga

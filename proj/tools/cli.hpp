#pragma once

#include <ostream>

namespace tdt::cli {

enum ExitStatus : int { kOk = 0, kDiagnostics = 1, kUsage = 2, kInternal = 3 };

// Runs the `tdt` command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tdt::cli

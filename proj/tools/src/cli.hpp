#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermotif::cli {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNumeric = 3 };

/// Runs the command line `args` (args[0] is the program name). Human-readable
/// summaries go to `out`, diagnostics to `err`; artifacts go to --out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermotif::cli

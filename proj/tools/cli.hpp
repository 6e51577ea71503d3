#pragma once

#include <iosfwd>
#include <cstdint>
#include <string>
#include <vector>

namespace apery9::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs the apery9 command line. JSON lines go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3", "1..6" or "1,2,5" (ranges may be mixed: "0..3,7").
std::vector<std::uint64_t> parse_range(const std::string& text);

}  // namespace apery9::cli

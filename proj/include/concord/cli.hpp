// Command-line front end. Subcommands: freq, freq-curve, sev, sev-curve,
// bench, synth. Exposed as a function so tests can drive it in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace concord {

// Runs the CLI against the given arguments (excluding the program name).
// Returns the process exit code: 0 success, 1 usage error, 2 data error.
// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concord

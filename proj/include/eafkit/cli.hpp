#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eafkit {

/// Runs the eafkit command line. `args[0]` is the program name.
///
/// Exit codes: 0 success, 1 validation error (bad flags, bad levels, bad
/// configuration, unexpected internal failure), 2 I/O error, 3 data error
/// (malformed or out-of-domain file content). Diagnostics and warnings go
/// to `err`, progress lines to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eafkit

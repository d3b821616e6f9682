#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logspiral::cli {

enum ExitCode : int { ok = 0, domain_error = 1, verify_failed = 2, bad_flags = 3 };

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or to --out files), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace logspiral::cli

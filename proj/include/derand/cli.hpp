#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace derand::cli {

enum ExitCode : int {
    ok = 0,
    usage_or_parse = 1,
    solve_failed = 2,
    not_certified = 3,
};

/// Runs the `derand` command line on `args` (program name excluded).
/// Subcommands: solve, gen, certify, bench.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace derand::cli

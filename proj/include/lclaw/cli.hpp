#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lclaw {

/// Command-line entry point (subcommands: solve, family, verify, gen, bench,
/// patterns). Exit codes: 0 ok, 1 usage, 2 parse error, 3 class violation,
/// 4 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lclaw

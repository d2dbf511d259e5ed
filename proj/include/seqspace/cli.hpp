#pragma once

#include <iosfwd>

namespace seqspace {

/// Parses argv, runs one subcommand, writes results to `out` and
/// diagnostics to `err`. Returns 0 on success, 2 on any input error.
/// Verdicts are data: a growth verdict still exits 0.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqspace

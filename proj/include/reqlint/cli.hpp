// ============================================================================
// cli.hpp — command-line driver
// ============================================================================
//
// The whole driver lives behind one function so tests can run it in-process
// against string streams. Subcommands:
//
//   check FILE     consistency verdict, witness, connectivity warnings
//   explain FILE   check plus the minimal inconsistent core when inconsistent
//   vacuity FILE   check plus trigger-reachability findings when consistent
//   graph FILE     connected components only
//   emit FILE      abstracted problem in an exchange format (--format smv|ltl)
//
// Common flags: --json PATH, --max-states N, --timeout SECONDS,
// --no-connectivity. Exit codes: 0 consistent / no verdict, 1 inconsistent,
// 2 parse or usage error, 3 indeterminate (resource cap).

#pragma once

#include <iosfwd>

namespace reqlint {

// argv follows main() conventions (argv[0] is the program name). Human
// output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace reqlint

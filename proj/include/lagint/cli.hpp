#ifndef LAGINT_CLI_HPP
#define LAGINT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

// Command-line front end.  Subcommands:
//   list    -- print the corpus (id, tags, description), optionally filtered
//   verify  -- verify chosen entries, optionally on one overridden interval
//   corpus  -- batch-verify (--all, --entry..., or --filter TAG)
//   eval    -- evaluate one special function at a point
// Exit codes: 0 success, 1 verification failure, 2 usage error.

namespace lagint {

// argv without the program name.  All normal output goes to `out`,
// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagint

#endif

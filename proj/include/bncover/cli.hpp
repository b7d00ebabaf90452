// cli.hpp -- command-line front end, factored out of main() so the whole
// surface is testable in-process.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bncover::cli {

// Runs one command. args is argv-style, program name included. Returns
// the process exit status: 0 for any completed verdict or search, 2 for a
// parse or validation error, 3 when a resource limit aborted the run.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bncover::cli

#pragma once

// Command-line front end. Subcommands: pb, lehmer, eval, quad, verify.
//
// Exit codes: 0 success, 1 domain or numeric failure (and failed checks in
// verify), 2 usage error. Failures are reported on `out` as {"error": ...}.

#include <ostream>
#include <string>
#include <vector>

namespace logsine {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logsine

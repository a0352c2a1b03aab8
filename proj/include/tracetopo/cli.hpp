#pragma once
// Command-line front end; kept in the library so the dispatcher is testable
// in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace tracetopo {

// Runs one subcommand. Returns 0 on success/pass, 1 on a domain failure
// (e.g. a failed check), 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tracetopo

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylgrid::cli {

/// Runs one command line (without the program name). Results go to `out`
/// unless redirected with -o; diagnostics go to `err` as
/// `error: E_TOKEN: message`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylgrid::cli

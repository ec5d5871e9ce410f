#ifndef GENIUS_CLI_HPP
#define GENIUS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace genius {

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out` unless --out is given; diagnostics go to `err`. Returns the
/// process exit code: 0 all pass, 1 some fail, 2 usage or internal error,
/// 3 inconclusive only.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genius

#endif

#ifndef SMR_CLI_HPP
#define SMR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace smr {

// Parses and runs one CLI invocation. args excludes the program name.
// Returns the process exit code: 0 success or verified, 1 failed property
// or false predicate, 2 invalid input, 3 resource cap exceeded or
// infeasible. The report body goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smr

#endif  // SMR_CLI_HPP

#ifndef WEAVE_CLI_HPP
#define WEAVE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace weave {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error (message on `err`), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weave

#endif  // WEAVE_CLI_HPP

#ifndef AMOD_CLI_HPP
#define AMOD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace amod {

/// Runs one command line (args excludes the program name). Reports go to
/// out (or --out), diagnostics to err. Returns the process exit code:
/// 0 success, 2 usage or spec error, 3 domain error, 4 hypothesis not
/// verified (injectivity unverified, or a failed verification criterion).
int run_cli(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace amod

#endif

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schublas::cli {

/// Runs one invocation given the arguments after the program name. Results
/// go to out, diagnostics to err. Exit codes: 0 success (and passed
/// verifications), 1 failed verification or computation error, 2 usage
/// error, 3 resource limit.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace schublas::cli

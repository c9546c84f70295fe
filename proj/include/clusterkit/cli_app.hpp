#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterkit {

/// Runs one CLI invocation. Exit codes: 0 success, 1 a verification command
/// found a counterexample, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace clusterkit

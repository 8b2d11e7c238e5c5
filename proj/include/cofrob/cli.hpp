#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cofrob {

/// Runs the command-line driver on `args` (without the program name).
/// Returns the process exit code: 0 when a verdict was reached, 2 for
/// invalid input, 3 when an internal identity failed.
///
/// A FILE argument of the form @NAME loads the built-in corpus instance NAME.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cofrob

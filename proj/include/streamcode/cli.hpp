#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sc {

/// Runs the command line (args excludes the program name). Returns the process
/// exit code: 0 when the command completed, even if what it checked failed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sc

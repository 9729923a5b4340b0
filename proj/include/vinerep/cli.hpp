#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vinerep {

// Command-line entry point (args without the program name).
// Exit codes: 0 success / trivial / empty report, 1 validation failure or
// nontrivial verdict, 2 usage or capacity errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vinerep

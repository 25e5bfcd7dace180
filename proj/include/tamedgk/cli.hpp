#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgk {

// Command line front end:
//   analyze <files...> [--json] [--convention]
//   check <file> --identity <name>
//   examples [--list | --emit <name>]
// Returns the process exit code (the worst per-file code for analyze).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tgk

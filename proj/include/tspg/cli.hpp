#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tspg {

// Exit codes: 0 success, 1 usage/parse/IO error, 2 oracle mismatch.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tspg

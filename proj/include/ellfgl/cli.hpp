#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellfgl {

// Exit codes: 0 when every check passes, 1 on a check failure (the failing
// checks are printed as JSON on `out`), 2 on a usage error (message on `err`).
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellfgl

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace novbi {

/// Run the command line front end. Returns the process exit code:
/// 0 when every check holds, 1 when a check fails, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novbi

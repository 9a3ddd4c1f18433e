#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dascent {

// Runs the command-line front end. args excludes the program name. Returns
// 0 on success (including a passing verify), 1 when a verify check fails,
// and 2 on usage or input errors (diagnostic on err).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dascent

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpm::cli {

enum ExitCode { Ok = 0, Usage = 1, BadData = 2, Failed = 3 };

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpm::cli

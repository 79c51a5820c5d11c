#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lensdga::cli {

enum ExitCode { Ok = 0, Usage = 1, Scope = 2, Disagreement = 3 };

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lensdga::cli

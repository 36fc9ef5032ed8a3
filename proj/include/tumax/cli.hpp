#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tumax::cli {

enum ExitCode : int { holds = 0, fails = 1, usage = 2, budget = 3 };

// args excludes the program name. Reports go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tumax::cli

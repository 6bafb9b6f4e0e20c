#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace janossy::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kUsageError = 2 };

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace janossy::cli

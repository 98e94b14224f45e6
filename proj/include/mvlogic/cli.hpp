#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mvlogic::cli {

enum ExitCode : int { pass = 0, fail = 1, input_error = 2 };

constexpr unsigned long long default_seed = 20240607;

// Runs one command line (without the program name). Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvlogic::cli

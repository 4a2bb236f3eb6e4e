#pragma once

#include <string>
#include <vector>

namespace quot {

struct CliResult {
    int exit_code = 0;   // 0 ok, 2 validation error, 3 mathematical contract violation
    std::string output;  // full stdout text, deterministic for fixed inputs
};

// Runs one command line (without the program name). Never throws; errors are
// reported through the exit code and output text.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace quot

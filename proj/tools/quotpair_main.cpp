#include <cstdio>
#include <string>
#include <vector>

#include "quot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    quot::CliResult r = quot::run_cli(args);
    std::fputs(r.output.c_str(), stdout);
    return r.exit_code;
}

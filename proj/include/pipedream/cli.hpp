#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pipedream {

enum ExitCode : int {
    exit_ok = 0,
    exit_counterexample = 1,
    exit_usage = 2,
    exit_guard = 3,
};

/// Entry point of the `pipedream` command. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pipedream

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it in-process. Exit codes: 0 success (or all checks pass),
// 1 check failure, 2 usage error.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace summa {

struct CliConfig {
    int digits = 30;          // >= 6
    long max_terms = 1000000; // >= 10
    unsigned cutoff = 100;
    bool json = false;
    bool plus_half = false; // b_1 convention flag
};

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Maps every library operation to the subcommand that exercises it, with a
/// runnable example argv. The coverage test executes each example and
/// expects a zero exit status.
struct OperationCoverage {
    const char* operation;
    const char* subcommand;
    std::vector<std::string> example_argv;
};

const std::vector<OperationCoverage>& operation_registry();

} // namespace summa

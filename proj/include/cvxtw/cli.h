#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cvxtw {

// Outcome of one command on one input. `verdict` is "pass", "fail" or
// "error"; pass holds exactly when measured <= bound and every validator
// accepted the output.
struct RunReport {
    std::string command;
    std::vector<std::string> inputs;
    int k = -1;
    int k_value = -1;
    int min_k_value = -1;
    int measured = -1;  // width, order, kValue or minKValue depending on command
    int bound = -1;
    int oracle = -1;    // exact optimum when small enough to compute
    double elapsed_ms = 0;
    std::string verdict;
    std::string message;
    int exit_code = 0;

    std::string to_json() const;
};

// Entry point of the command-line tool. `args` excludes the program name.
// Returns the process exit code: 0 pass, 1 bound or validation failure,
// 2 input error, 3 internal assertion.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cvxtw

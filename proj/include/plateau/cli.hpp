#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plateau {

// One parsed invocation. Exactly one subcommand; every field is set from
// flags only, never from the environment or config files.
struct RunConfig {
    std::string subcommand;  // enumerate | stats | map | poly | verify | series
    std::string family;
    std::string bijection;
    std::string method;
    std::string identity;
    std::string input;
    std::string egf;
    std::string format;  // json | lines | csv; empty = subcommand default
    std::vector<std::string> select;
    int n = 0;
    int max_n = 0;
    int k = 0;
    int q = 0;
    int order = -1;
    bool all = false;
    bool trace = false;
    bool one_line = false;
    bool timings = false;
};

// Executes a validated config. Results go to `out`, diagnostics to `err`.
// Returns 0 on success / all-pass, 1 when a verification fails, 2 on usage
// or input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plateau

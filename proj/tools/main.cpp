#include <iostream>
#include <string>
#include <vector>

#include "plateau/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return plateau::run_cli(args, std::cout, std::cerr);
}

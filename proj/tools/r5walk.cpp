#include <iostream>
#include <string>
#include <vector>

#include "r5/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return r5::cli::run_cli(args, {std::cout, std::cerr});
}

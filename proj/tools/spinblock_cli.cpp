#include <iostream>
#include <string>
#include <vector>

#include "spinblock/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spinblock::run_cli(args, std::cout, std::cerr);
}

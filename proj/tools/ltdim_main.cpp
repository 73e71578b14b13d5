#include <iostream>
#include <string>
#include <vector>

#include "ltdim/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ltdim::run_cli(args, std::cout, std::cerr);
}

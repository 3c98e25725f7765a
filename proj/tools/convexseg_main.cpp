#include <iostream>
#include <string>
#include <vector>

#include "convexseg/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv, argv + argc);
    return convexseg::cli::main(args, std::cout, std::cerr);
}

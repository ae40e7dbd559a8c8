#include <iostream>
#include <vector>

#include "genform/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return genform::run_cli(args, std::cout, std::cerr);
}

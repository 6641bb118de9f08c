#include <iostream>
#include <string>
#include <vector>

#include "orthoconf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return orthoconf::run_cli(args, std::cin, std::cout, std::cerr);
}

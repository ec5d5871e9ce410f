#include <iostream>
#include <string>
#include <vector>

#include "genius/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return genius::run_cli(args, std::cout, std::cerr);
}

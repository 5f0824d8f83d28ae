#include <iostream>
#include <vector>

#include "qgrowth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qgrowth::run_cli(std::move(args), std::cout, std::cerr);
}

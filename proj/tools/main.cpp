#include <iostream>

#include "ytg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ytg::cli::run(args, std::cout, std::cerr);
}

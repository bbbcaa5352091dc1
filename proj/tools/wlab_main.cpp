#include <iostream>
#include <string>
#include <vector>

#include "wlab/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wlab::cli::run(args, std::cout, std::cerr);
}

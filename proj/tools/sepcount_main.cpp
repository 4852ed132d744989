#include <iostream>
#include <string>
#include <vector>

#include "sepcount/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sepcount::cli::run(args, std::cout, std::cerr);
}

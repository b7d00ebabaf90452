#include <iostream>
#include <string>
#include <vector>

#include "bncover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return bncover::cli::run(args, std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "polytone/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return polytone::cli::run(args, std::cout, std::cerr);
}

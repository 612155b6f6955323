#include <iostream>
#include <vector>

#include "rmdec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rmdec::run(args, std::cin, std::cout, std::cerr);
}

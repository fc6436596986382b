#include <iostream>
#include <vector>

#include "qrisk/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return qrisk::run_command(args, std::cout, std::cerr);
}

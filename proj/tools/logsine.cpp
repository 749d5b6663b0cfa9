#include <iostream>
#include <string>
#include <vector>

#include "logsine/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return logsine::run_cli(args, std::cout, std::cerr);
}

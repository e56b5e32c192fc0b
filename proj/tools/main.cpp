#include <iostream>

#include "cvxtw/cli.h"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cvxtw::run_cli(args, std::cout, std::cerr);
}

#include <iostream>

#include "closurelab/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return closurelab::cli::run(args, std::cout, std::cerr);
}

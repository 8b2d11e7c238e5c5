#include <iostream>

#include "cofrob/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cofrob::run_cli(args, std::cout, std::cerr);
}

#include "effbound/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return effbound::run_subcommand(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

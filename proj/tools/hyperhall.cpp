#include <iostream>

#include "hyperhall/cli.hpp"

int main(int argc, char** argv)
{
    return hyperhall::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

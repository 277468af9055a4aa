#include <iostream>

#include "k3acm/cli.hpp"

int main(int argc, char** argv)
{
    return k3acm::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include <iostream>

#include "ajforge_cli/cli.hpp"

int main(int argc, char **argv)
{
    return ajforge::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include "haan_cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return haan::cli::run(argc, argv, std::cout, std::cerr);
}

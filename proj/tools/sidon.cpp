#include "sidon/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return sidon::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}

#include "flex/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return flex::run_cli(argc, argv, std::cout, std::cerr);
}

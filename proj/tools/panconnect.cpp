#include <panconnect/cli/commands.hpp>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    return panconnect::cli::run_cli(argc, argv, std::cout, std::cerr);
}

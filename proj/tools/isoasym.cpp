#include <iostream>
#include <string>
#include <vector>

#include "isoasym/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return isoasym::cli::run(args, std::cout, std::cerr);
}

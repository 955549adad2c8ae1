#include <iostream>
#include <string>
#include <vector>

#include "prmforge/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return prmforge::dispatch(args, std::cout, std::cerr);
}

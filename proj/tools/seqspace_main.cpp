#include <iostream>

#include "seqspace/cli.hpp"

int main(int argc, char** argv) {
    return seqspace::run_cli(argc, argv, std::cout, std::cerr);
}

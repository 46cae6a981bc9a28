#include <iostream>

#include "sextic/cli.hpp"

int main(int argc, char** argv) {
    return sextic::run_cli(argc, argv, std::cout, std::cerr);
}

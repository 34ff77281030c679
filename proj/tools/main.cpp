#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return fracmem::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr);
}

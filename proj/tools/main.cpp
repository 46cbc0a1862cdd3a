#include <iostream>

#include "ktz/cli.hpp"

int main(int argc, char** argv) {
    return ktz::cli::main_entry(argc, argv, std::cout, std::cerr);
}

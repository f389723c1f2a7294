#include <iostream>

#include "elcx/cli.hpp"

int main(int argc, char** argv) {
    return elcx::cli::run(argc, argv, std::cout, std::cerr);
}

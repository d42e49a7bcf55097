#include <iostream>

#include "loopkit_cli.hpp"

int main(int argc, char** argv) {
    return loopkit::cli::run(argc, argv, std::cout, std::cerr);
}

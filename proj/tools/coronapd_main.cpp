#include <iostream>

#include "coronapd/cli.hpp"

int main(int argc, char** argv) {
    return coronapd::cli::run(argc, argv, std::cout, std::cerr);
}

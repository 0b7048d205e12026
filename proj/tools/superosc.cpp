#include <iostream>

#include "superosc/cli.hpp"

int main(int argc, char** argv) {
    return superosc::cli::run(argc, argv, std::cout, std::cerr);
}

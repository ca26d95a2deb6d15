// ============================================================================
// reqlint.cpp — executable entry point
// ============================================================================

#include <exception>
#include <iostream>

#include "reqlint/cli.hpp"

int main(int argc, char** argv) {
    try {
        return reqlint::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "reqlint: internal error: " << e.what() << "\n";
        return 2;
    }
}

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    try {
        return spex::cli::run(argc, argv, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return spex::cli::kFailed;
    }
}

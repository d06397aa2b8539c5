#include <leetile/cli.hpp>

#include <iostream>

int main(int argc, char **argv) {
    return leetile::cli::run(argc, argv, std::cout, std::cerr);
}

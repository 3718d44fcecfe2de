#include "cli.hpp"

#include "mdl/gmp_pool.hpp"

#include <iostream>

int main(int argc, char** argv) {
    mdl::install_gmp_pool();
    return mdl::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

#include <iostream>
#include <string>
#include <vector>

#include "upper_envelope/cli.hpp"

int main(int argc, char** argv) {
    return uenv::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

#include <iostream>

#include "simsub/cli.hpp"

int main(int argc, char** argv) { return simsub::cli::run(argc, argv, std::cout, std::cerr); }

#include "tcsphere/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return tcsphere::cli::run(argc, argv, std::cout, std::cerr); }

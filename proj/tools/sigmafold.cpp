#include <iostream>

#include "sigmafold/cli.hpp"

int main(int argc, char** argv) { return sigma::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "mockgauss/cli.hpp"

int main(int argc, char** argv) { return mockgauss::run_cli(argc, argv, std::cout, std::cerr); }

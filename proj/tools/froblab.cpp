#include <iostream>

#include "froblab/cli.hpp"

int main(int argc, char** argv) { return froblab::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "clat/cli.hpp"

int main(int argc, char** argv) { return clat::run_cli(argc, argv, std::cout, std::cerr); }

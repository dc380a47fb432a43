#include <iostream>

#include "lie/cli.hpp"

int main(int argc, char** argv) { return lie::run_cli(argc, argv, std::cout, std::cerr); }

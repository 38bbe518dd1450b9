#include <iostream>

#include "cdsbench/cli.hpp"

int main(int argc, char** argv) { return cdsbench::run_cli(argc, argv, std::cout, std::cerr); }

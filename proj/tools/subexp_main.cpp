#include "subexp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return subexp::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "dglcl/cli.hpp"

int main(int argc, char** argv) { return dglcl::run_cli(argc, argv, std::cout, std::cerr); }

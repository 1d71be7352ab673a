#include <iostream>

#include "klf/cli.hpp"

int main(int argc, char** argv) { return klf::run_cli(argc, argv, std::cout, std::cerr); }

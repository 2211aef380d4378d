#include "hookdiff/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hookdiff::run_cli(argc, argv, std::cout, std::cerr); }

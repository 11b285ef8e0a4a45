#include <iostream>

#include "nary/cli.hpp"

int main(int argc, char** argv) { return nary::run_cli(argc, argv, std::cout, std::cerr); }

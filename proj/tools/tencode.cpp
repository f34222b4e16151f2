#include <iostream>

#include "tencode/cli.hpp"

int main(int argc, char** argv) { return tencode::run_cli(argc, argv, std::cout, std::cerr); }

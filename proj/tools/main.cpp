#include <iostream>

#include "nano/cli.hpp"

int main(int argc, char** argv) { return nano::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "ordvga/cli.hpp"

int main(int argc, char** argv) { return ordvga::run_cli(argc, argv, std::cout, std::cerr); }

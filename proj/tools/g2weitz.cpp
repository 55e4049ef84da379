#include "g2weitz/cli_io.hpp"

#include <iostream>

int main(int argc, char** argv) { return g2w::run_command(argc, argv, std::cout, std::cerr); }

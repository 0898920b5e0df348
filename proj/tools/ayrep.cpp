#include <iostream>

#include "ayrep/cli.hpp"

int main(int argc, char** argv) { return ayrep::run_command_line(argc, argv, std::cout, std::cerr); }

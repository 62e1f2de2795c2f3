#include <iostream>

#include "graphmag_cli/commands.hpp"

int main(int argc, char** argv) { return graphmag::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "thetalab/cli/commands.hpp"

int main(int argc, char** argv) { return thetalab::cli::run(argc, argv, std::cout, std::cerr); }

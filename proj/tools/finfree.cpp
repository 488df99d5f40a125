#include <iostream>

#include "finfree/cli.hpp"

int main(int argc, char** argv) { return finfree::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "splinedim/cli.hpp"

int main(int argc, char** argv) { return splinedim::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "chordtim/cli.hpp"

int main(int argc, char** argv) { return chordtim::cli::run(argc, argv, std::cout, std::cerr); }

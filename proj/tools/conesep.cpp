#include "conesep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return conesep::cli::run(argc, argv, std::cout, std::cerr); }

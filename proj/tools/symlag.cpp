#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return symlag::cli::run(argc, argv, std::cout, std::cerr); }

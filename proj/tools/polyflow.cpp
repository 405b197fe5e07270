#include <iostream>

#include "polyflow/cli.hpp"

int main(int argc, char** argv) { return polyflow::cli::run(argc, argv, std::cout, std::cerr); }

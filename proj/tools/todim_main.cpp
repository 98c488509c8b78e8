#include <iostream>

#include "todim/cli.hpp"

int main(int argc, char** argv) { return todim::cli::run(argc, argv, std::cout, std::cerr); }

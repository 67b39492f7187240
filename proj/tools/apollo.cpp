#include "apollonian/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return apollonian::cli::run(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "heartproof/cli.hpp"

int main(int argc, char** argv) { return heartproof::cli::run(argc, argv, std::cout, std::cerr); }

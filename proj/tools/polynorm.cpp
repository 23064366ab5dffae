#include <iostream>

#include "polynorm/cli.hpp"

int main(int argc, char** argv) { return polynorm::cli::run(argc, argv, std::cout, std::cerr); }

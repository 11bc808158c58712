#include <iostream>

#include "hapecon/cli.hpp"

int main(int argc, char** argv) { return hapecon::cli::run(argc, argv, std::cout, std::cerr); }

#include "superharm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return superharm::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "eupmol/cli.hpp"

int main(int argc, char** argv) { return eupmol::run_cli(argc, argv, std::cout, std::cerr); }

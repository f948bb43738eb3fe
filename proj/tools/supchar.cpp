#include <iostream>

#include "supchar/cli.hpp"

int main(int argc, char** argv) { return supchar::run_cli(argc, argv, std::cout, std::cerr); }

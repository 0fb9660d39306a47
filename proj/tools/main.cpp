#include <iostream>

#include "hofd/cli.hpp"

int main(int argc, char** argv) { return hofd::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "nestcyc/cli.hpp"

int main(int argc, char** argv) { return nestcyc::cli_run(argc, argv, std::cout, std::cerr); }

#include "cyhit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cyhit::run_cli(argc, argv, std::cout, std::cerr); }

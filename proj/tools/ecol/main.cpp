#include <iostream>

#include "ecol/cli.hpp"

int main(int argc, char** argv) { return ecol::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }

#include <iostream>

#include "glci_cli/cli.hpp"

int main(int argc, char** argv) { return glci::cli::main_entry(argc, argv, std::cout, std::cerr); }

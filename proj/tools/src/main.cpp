#include <iostream>

#include "cutsparse_cli/cli.hpp"

int main(int argc, char** argv) { return cutsparse::cli::main_entry(argc, argv, std::cout, std::cerr); }

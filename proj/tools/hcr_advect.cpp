#include <iostream>

#include "hcr/cli.hpp"

int main(int argc, char** argv) { return hcr::cli::main_entry(argc, argv, std::cout, std::cerr); }

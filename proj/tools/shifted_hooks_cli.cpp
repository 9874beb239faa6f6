#include <iostream>

#include "shifted_hooks/cli.hpp"

int main(int argc, char** argv) { return shifted_hooks::cli::run(argc, argv, std::cout, std::cerr); }

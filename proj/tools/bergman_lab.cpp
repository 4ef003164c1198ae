#include <iostream>

#include "bergman/cli.hpp"

int main(int argc, char** argv) { return bergman::main_entry(argc, argv, std::cout, std::cerr); }

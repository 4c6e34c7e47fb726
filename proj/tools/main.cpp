#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) { return mukai::cli::main_entry(argc, argv, std::cout, std::cerr); }

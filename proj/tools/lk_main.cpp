#include <iostream>

#include "lk/cli.hpp"

int main(int argc, char** argv) { return lk::cli_main(argc, argv, std::cout, std::cerr); }

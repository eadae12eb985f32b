#include <iostream>

#include "qident/cli.hpp"

int main(int argc, char** argv) { return qident::cli::run_cli(argc, argv, std::cout, std::cerr); }

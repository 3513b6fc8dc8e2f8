#include "gogmagog/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return gogmagog::cli::cli_main(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "qsp/cli.hpp"

int main(int argc, char** argv) { return qsp::cli_main(argc, argv, std::cout, std::cerr); }

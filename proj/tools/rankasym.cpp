#include <iostream>

#include "rankasym/cli.hpp"

int main(int argc, char** argv) { return rankasym::cli::run(argc, argv, std::cout, std::cerr); }

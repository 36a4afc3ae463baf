#include "subseq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return subseq::cli::run(argc, argv, std::cout, std::cerr); }

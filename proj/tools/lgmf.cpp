#include <iostream>

#include "lgmf/cli.hpp"

int main(int argc, char** argv) { return lgmf::cli::run(argc, argv, std::cout, std::cerr); }

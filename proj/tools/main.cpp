#include "cli.hpp"

int main(int argc, char** argv) { return dtriple::cli::run(argc, argv, std::cin, std::cout, std::cerr); }

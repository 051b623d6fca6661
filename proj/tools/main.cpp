#include "g2rs/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return g2rs::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "pipedream/cli.hpp"

int main(int argc, char** argv) { return pipedream::run_cli(argc, argv, std::cout, std::cerr); }

#include <lonely/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return lonely::cli::run(argc, argv, std::cout, std::cerr); }

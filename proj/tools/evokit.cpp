#include "evokit_cli.hpp"

int main(int argc, char** argv) { return evokit::cli::run(argc, argv, std::cout, std::cerr); }

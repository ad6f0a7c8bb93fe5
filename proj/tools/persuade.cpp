#include <iostream>

#include "persuade/cli/app.hpp"

int main(int argc, char** argv) { return persuade::cli::run_cli(argc, argv, std::cout); }

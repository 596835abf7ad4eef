#include <iostream>

#include "darp/cli.hpp"

int main(int argc, char** argv) { return darp::cli::run(argc, argv, std::cout, std::cerr); }

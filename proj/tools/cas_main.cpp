#include "cas/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return cas::run_cli(argc, argv, std::cout, std::cerr); }

#include <iostream>

#include "dispatch.hpp"

int main(int argc, char** argv) { return seqsched::cli::dispatch(argc, argv, std::cin, std::cout, std::cerr); }

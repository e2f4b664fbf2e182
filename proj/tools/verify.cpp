#include <iostream>

#include "thetaval/pipeline.hpp"

int main(int argc, char** argv) { return thetaval::verify_main(argc, argv, std::cout, std::cerr); }

#include "relmaser/cli.hpp"

int main(int argc, char** argv) { return relmaser::cli::run(argc, argv); }

#include "hoquant/cli.hpp"

int main(int argc, char** argv) { return hoquant::cli::run(argc, argv); }

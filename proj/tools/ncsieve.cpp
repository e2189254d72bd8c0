#include "ncsieve/cli.hpp"

int main(int argc, char** argv) { return ncsieve::cli::run(argc, argv); }

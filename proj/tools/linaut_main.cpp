#include "linaut/cli.hpp"

int main(int argc, char** argv) { return linaut::cli_main(argc, argv); }

#include "spnodes/cli.hpp"

int main(int argc, char** argv) { return spnodes::cli::cli_main(argc, argv); }

#include "gueindex/cli.hpp"

int main(int argc, char** argv) { return gueindex::cli_main(argc, argv); }

#include "dist2/cli.hpp"

int main(int argc, char** argv) { return dist2::run_cli_main(argc, argv); }

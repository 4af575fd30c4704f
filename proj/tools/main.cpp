#include "cli.hpp"

int main(int argc, char** argv) { return rmt::cli::run_cli(argc, argv); }

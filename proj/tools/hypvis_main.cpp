#include "hypvis/cli.hpp"

int main(int argc, char** argv) { return hypvis::run_cli(argc, argv); }

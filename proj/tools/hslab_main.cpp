#include "hslab/cli.hpp"

int main(int argc, char** argv) { return hslab::run_cli(argc, argv); }

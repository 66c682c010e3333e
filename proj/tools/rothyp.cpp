#include "rothyp/cli.hpp"

int main(int argc, char** argv) { return rothyp::cli::run(argc, argv); }

#include "cli.hpp"

int main(int argc, char** argv) { return causaldisc::cli::cli_main(argc, argv); }

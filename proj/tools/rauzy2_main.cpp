#include "rauzy2/cli.hpp"

int main(int argc, char** argv) { return rauzy2::cli_main(argc, argv); }

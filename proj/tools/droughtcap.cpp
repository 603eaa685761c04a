#include "droughtcap/cli.hpp"

int main(int argc, char** argv) { return droughtcap::cli::run(argc, argv); }

#include "orbivol/cli.hpp"

int main(int argc, char** argv) { return orbivol::cli::run(argc, argv); }

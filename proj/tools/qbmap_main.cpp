#include "qbmap/cli.hpp"

int main(int argc, char** argv) { return qbmap::cli::run(argc, argv); }

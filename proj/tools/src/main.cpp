#include "cli.hpp"

int main(int argc, char **argv) { return paircorr::cli::run(argc, argv); }

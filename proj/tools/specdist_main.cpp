#include "cli.hpp"

int main(int argc, char** argv) { return specdist::cli::run(argc, argv); }

#include "cli.hpp"

int main(int argc, char** argv) { return ratweyl::cli::run(argc, argv); }

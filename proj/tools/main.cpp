#include "cli.hpp"

int main(int argc, char** argv) { return anonhard::cli::run(argc, argv); }

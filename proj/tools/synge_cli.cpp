#include "synge/cli.hpp"

int main(int argc, char** argv) { return synge::cli::run(argc, argv); }

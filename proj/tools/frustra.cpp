#include "frustra/cli.hpp"

int main(int argc, char** argv) { return frustra::cli::run(argc, argv); }

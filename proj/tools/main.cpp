#include "hodgerec/cli.hpp"

int main(int argc, char** argv) { return hodgerec::cli::run(argc, argv); }

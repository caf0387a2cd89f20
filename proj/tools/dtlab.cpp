#include "clusterdt/cli.hpp"

int main(int argc, char** argv) { return clusterdt::cli::run(argc, argv); }

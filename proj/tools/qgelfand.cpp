#include "qgelfand/cli.hpp"

int main(int argc, char** argv) { return qgelfand::run_cli(argc, argv); }

#include "vortexclt/cli.hpp"

int main(int argc, char** argv) { return vortexclt::run(argc, argv); }

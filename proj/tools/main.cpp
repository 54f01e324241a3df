#include "bcnrand/cli.hpp"

int main(int argc, char** argv) { return bcn::cli::run(argc, argv); }

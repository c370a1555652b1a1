#include "swkit/cli.hpp"

int main(int argc, char** argv) { return swkit::cli::run(argc, argv); }

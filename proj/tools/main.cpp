#include "tricomplex/cli.hpp"

int main(int argc, char** argv) { return tricomplex::cli::run(argc, argv); }

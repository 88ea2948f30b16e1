#include <plab/cli.hpp>

int main(int argc, char** argv) { return plab::cli::run_main(argc, argv); }

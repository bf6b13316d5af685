#include "cli.hpp"
int main(int argc, char** argv) { return bts::cli::run(argc, argv); }

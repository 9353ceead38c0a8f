#include "rrsim/io.hpp"

int main(int argc, char** argv) { return rrsim::cli_main(argc, argv); }

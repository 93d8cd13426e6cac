#include "vraag/cli.hpp"

int main(int argc, char** argv) { return vraag::cli_main(argc, argv); }

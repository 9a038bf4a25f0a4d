#include "grundy/cli.hpp"

int main(int argc, char** argv) { return grundy::run_cli(argc, argv); }

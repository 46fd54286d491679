#include "r1space/cli.hpp"

int main(int argc, char** argv) { return r1::run_cli(argc, argv); }

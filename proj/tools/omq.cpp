#include "omq/cli.h"

int main(int argc, char** argv) { return omq::run_cli(argc, argv); }

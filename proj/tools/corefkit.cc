#include "corefkit/cli.h"

int main(int argc, char **argv) { return corefkit::RunCli(argc, argv); }

#include "schemeconn/cli.hpp"

int main(int argc, char** argv) { return schemeconn::run_cli(argc, argv); }

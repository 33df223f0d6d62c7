#include "ludersgap/cli_commands.hpp"

int main(int argc, char** argv) { return ludersgap::run_cli(argc, argv); }

#include "commands.hpp"

int main(int argc, char** argv) { return glrip::cli::run_cli(argc, argv); }

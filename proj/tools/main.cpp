#include "spellfix_cli.hpp"

int main(int argc, char** argv) { return spellfix::cli::run(argc, argv); }

#include "tusv/cli.hpp"

int main(int argc, char** argv) { return tusv::cli::main_entry(argc, argv); }

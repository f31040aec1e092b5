#include "mcfc/runner.hpp"

int main(int argc, char** argv) { return mcfc::run_cli(argc, argv); }

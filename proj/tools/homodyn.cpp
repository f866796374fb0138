#include "runner.hpp"

int main(int argc, char** argv) { return homodyn::cli::run(argc, argv); }

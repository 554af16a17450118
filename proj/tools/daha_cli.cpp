#include "cli/dispatch.hpp"

int main(int argc, char** argv) { return daha::cli::run(argc, argv); }

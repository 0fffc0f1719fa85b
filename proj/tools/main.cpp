#include "cli.hpp"

int main(int argc, char** argv) { return symcurve::cli::runMain(argc, argv); }

#pragma once

#include <string>
#include <vector>

#include "symcurve/report.hpp"

namespace symcurve::cli {

/// Runs the command line given the arguments after the program name.
/// Exit codes: 0 all checks passed, 1 at least one failed, 2 configuration
/// error, 3 internal fault.
int run(const std::vector<std::string>& args);

int runMain(int argc, const char* const* argv);

/// Builds the report for an already validated configuration (the Fp modulus
/// must be set beforehand when the field is prime). Grid points execute in
/// parallel; the report order is the grid order.
Report buildReport(const RunConfig& config);

}  // namespace symcurve::cli

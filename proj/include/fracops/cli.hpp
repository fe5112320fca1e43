#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace fracops {

// Parse "<re>[+<im>i]" (also accepting a negative imaginary part, e.g.
// "0.5-0.5i"). Throws std::invalid_argument on malformed input.
std::complex<double> parse_order(const std::string& text);

// Inverse of parse_order; pure real orders print without the i-part.
std::string format_order(std::complex<double> s);

// Run the command-line front end on the given arguments (without argv[0]).
// Normal output goes to out, diagnostics to err. Returns the process exit
// code: 0 success, 2 usage/parse error, 3 numeric/domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fracops

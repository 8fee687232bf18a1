#pragma once

#include "rigidcalc/cyclotomic.hpp"
#include "rigidcalc/errors.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidcalc::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kInputError = 2 };

/// Runs one subcommand. `args` excludes the program name. Everything the
/// command prints goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exit code for a library error: malformed input maps to 2, a well-formed
/// input whose check fails maps to 1.
int exit_code_for(ErrorCode code);

/// Integer polynomial in X such as "X^2-3X+2" or "x^4 + 5"; coefficients
/// returned constant term first.
std::vector<long> parse_integer_polynomial(const std::string& text);

/// "1", "-1", "zeta3^2" or a CycNumber JSON object.
CycNumber parse_scalar(const std::string& text);

} // namespace rigidcalc::cli

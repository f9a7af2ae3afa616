#pragma once

#include <string>

namespace lottie_forge {

// Rounds to the given number of significant digits (significant figures,
// not decimal places). Stable under repeated application.
double round_sig(double value, int digits);

// Shortest decimal text that parses back to exactly the same double.
// Integral values within the exact-integer range print without a
// fractional part.
std::string format_number(double value);

// strtod over the full string; returns false on trailing garbage.
bool parse_number(const std::string& text, double& out);

} // namespace lottie_forge

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gftk/poly.hpp"

namespace gftk {

// Polynomial in x and y: rational literals (`3`, `-1/2`), the variables,
// + - * ^ and parentheses; whitespace is ignored. Multiplication is always
// explicit (`4*x`, not `4x`). Throws InvalidArgument with the offending
// position on bad input.
XYPoly parse_xy(std::string_view text);

// Coefficient list: `#` starts a comment; each remaining line is either one
// rational (`p/q` or integer) or a b-file style `index value` pair. Indexed
// rows must be consecutive; values are returned in order.
std::vector<Rational> parse_coefficients(std::string_view text);

// Same, reading from a file; throws InvalidArgument if it cannot be opened.
std::vector<Rational> read_coefficients(const std::string& path);

} // namespace gftk

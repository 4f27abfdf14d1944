#pragma once

#include <string>
#include <string_view>

namespace eafkit {

/// Shortest decimal text that parses back to the identical double.
/// Infinities are written as "inf" / "-inf". NaN is not representable.
std::string format_double(double value);

/// Strict inverse of format_double: the whole token must be consumed.
/// Throws FormatError on malformed text and DataError on NaN.
double parse_double(std::string_view text);

}  // namespace eafkit

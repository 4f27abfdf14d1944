#include "eafkit/number_format.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "eafkit/errors.hpp"

namespace eafkit {

std::string format_double(double value) {
    if (std::isnan(value)) throw DataError("cannot format NaN");
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, result.ptr);
}

double parse_double(std::string_view text) {
    if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
        throw FormatError("not a number: '" + std::string(text) + "'");
    }
    if (std::isnan(value)) throw DataError("NaN value '" + std::string(text) + "'");
    return value;
}

}  // namespace eafkit

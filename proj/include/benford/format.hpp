#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace benford {

/// Locale-independent shortest-general formatting with `digits` significant
/// digits (17 round-trips a double).
inline std::string format_real(double v, int digits = 17) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
    return std::string(buf, res.ptr);
}

/// Fixed notation with `decimals` places.
inline std::string format_fixed(double v, int decimals) {
    char buf[400];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

}  // namespace benford

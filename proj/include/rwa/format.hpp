#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "rwa/errors.hpp"

namespace rwa {

// Shortest round-trip decimal form; the byte-level contract for every CSV.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& text) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    double v = 0.0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end)
        throw ValidationError("not a number: '" + text + "'");
    return v;
}

// Accepts "5", "2.5", and "5/2"; returns twice the value as an exact integer.
int parse_half_integer_twice(const std::string& text);

} // namespace rwa

#include "rwa/format.hpp"

#include <cmath>

namespace rwa {

int parse_half_integer_twice(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const double num = parse_double(text.substr(0, slash));
        const double den = parse_double(text.substr(slash + 1));
        if (den != 2.0)
            throw ValidationError("half-integer fractions must have denominator 2");
        const double twice = num;
        if (twice != std::floor(twice))
            throw ValidationError("numerator must be an integer in '" + text + "'");
        return int(twice);
    }
    const double v = parse_double(text);
    const double twice = 2.0 * v;
    if (std::abs(twice - std::round(twice)) > 1e-9)
        throw ValidationError("'" + text + "' is not a half-integer");
    return int(std::lround(twice));
}

} // namespace rwa

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hopspan {

// Stretch slack epsilon and other small exact fractions.
using Rational = boost::rational<std::int64_t>;

// Parses "p/q" with p >= 0, q > 0. Anything else (decimals, bare integers,
// signs, whitespace) throws Error{Errc::Parse}.
Rational parse_ratio(std::string_view text);

// "p/q" with the denominator always present, e.g. "0/1", "1/2".
std::string format_ratio(const Rational& value);

// True iff weight <= (1 + eps) * distance, evaluated without rounding.
inline bool within_stretch(std::int64_t weight, std::int64_t distance, const Rational& eps) {
    const __int128 lhs = static_cast<__int128>(weight) * eps.denominator();
    const __int128 rhs =
        static_cast<__int128>(eps.denominator() + eps.numerator()) * distance;
    return lhs <= rhs;
}

}  // namespace hopspan

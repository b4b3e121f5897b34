#include <charconv>

#include "hopspan/error.hpp"
#include "hopspan/rational.hpp"

namespace hopspan {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::OutOfInterval: return "OutOfInterval";
        case Errc::NotSorted: return "NotSorted";
        case Errc::OutOfRange: return "OutOfRange";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::Unspannable: return "Unspannable";
        case Errc::TooLarge: return "TooLarge";
        case Errc::KindMismatch: return "KindMismatch";
        case Errc::NoRegion: return "NoRegion";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = digits.data();
    const auto* last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (digits.empty() || digits.front() == '-' || digits.front() == '+' || ec != std::errc{} ||
        ptr != last) {
        throw Error(Errc::Parse, "expected a fraction p/q, got '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational parse_ratio(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw Error(Errc::Parse, "expected a fraction p/q, got '" + std::string(text) + "'");
    }
    const auto num = parse_digits(text.substr(0, slash), text);
    const auto den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string format_ratio(const Rational& value) {
    return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

}  // namespace hopspan

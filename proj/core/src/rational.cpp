#include "rlse/rational.hpp"

#include <charconv>

#include "rlse/errors.hpp"

namespace rlse {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw ParseError("malformed rational: '" + text + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text));
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

}  // namespace rlse

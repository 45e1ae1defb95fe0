#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace rlse {

// Exact rational arithmetic everywhere; floating point is not used in the
// core (equality of probabilities must be decidable).
using Rational = boost::rational<std::int64_t>;

inline Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

// Formats as "num/den", or just "num" for integers.
std::string to_string(const Rational& r);

// Parses "num/den" or a bare integer. Throws ParseError on malformed input
// or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace rlse

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace alcove {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Floor toward -infinity, exact on rationals.
inline Int floor_rat(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int quot = n / d;
    if (n % d != 0 && n < 0) quot -= 1;
    return quot;
}

inline Int ceil_rat(const Rat& q) { return -floor_rat(-q); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// Parses "p/q" or "p"; throws ParseError on malformed input.
Rat parse_rat(const std::string& s);

// Renders as "p/q", or "p" when the denominator is one.
std::string format_rat(const Rat& q);

}  // namespace alcove

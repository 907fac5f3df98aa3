#pragma once

#include <gmpxx.h>
#include <string>

namespace almansi {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Construct num/den in canonical form.
inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parse "a/b" or "a". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

} // namespace almansi

#pragma once

#include <gmpxx.h>

#include <string>

namespace pviheat {

/// The coefficient field: exact rationals with arbitrary-precision integers.
/// mpq_class keeps the canonical form invariant for us
/// (gcd(|num|, den) = 1, den >= 1, zero stored as 0/1).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& q);

/// Parses "p", "-p" or "p/q".  Throws ParseError on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace pviheat

#pragma once

#include <cstdint>
#include <optional>

#include "pviheat/multipoly.hpp"

namespace pviheat {

/// Multivariate GCD: monomial content extraction, recursive content/primitive
/// split and a subresultant pseudo-remainder sequence in the most frequent
/// shared variable.  `budget` bounds the number of elementary term operations;
/// when it is exhausted the attempt is abandoned and nullopt is returned.
std::optional<MultiPoly> try_poly_gcd(const MultiPoly& a, const MultiPoly& b,
                                      std::uint64_t budget);

/// GCD with fallback: on budget exhaustion returns only the (always cheap)
/// common monomial factor, so callers may end up storing unreduced fractions.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Common monomial factor of all terms of both polynomials.
MultiPoly monomial_gcd(const MultiPoly& a, const MultiPoly& b);

/// Schwartz-Zippel-style coprimality probe: specializes all but one variable
/// at random rational points and takes univariate GCDs.  A `true` verdict is
/// correct up to the (retried) chance of an unlucky evaluation point; callers
/// use it only to skip reduction work, never to decide equality.
bool probably_coprime(const MultiPoly& a, const MultiPoly& b);

}  // namespace pviheat

#pragma once

#include <span>
#include <vector>

#include "pviheat/ratfunc.hpp"

namespace pviheat {

/// Principal part at one pole of the spectral variable t.
/// coeffs[j] multiplies 1/(t - pole)^(j+1); order == coeffs.size().
struct PolePart {
    RatFunc pole;
    std::vector<RatFunc> coeffs;
};

struct PartialFractions {
    std::vector<PolePart> parts;  // one entry per declared pole actually present
    RatFunc polynomial_part;      // polynomial in t (coefficients t-free)

    /// Recomposes the decomposition into a single rational function.
    RatFunc recompose() const;

    /// Coefficient of 1/(t - pole) at a declared pole, zero if absent.
    RatFunc residue_at(const RatFunc& pole) const;
};

/// Decomposition in simple elements of t.  The denominator must factor, in t,
/// into powers of (t - p) for p in `poles` times a t-free factor; otherwise the
/// error names the offending irreducible t-factor.
PartialFractions partial_fractions_t(const RatFunc& f, std::span<const RatFunc> poles);

}  // namespace pviheat

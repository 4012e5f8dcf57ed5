#pragma once

#include <map>
#include <set>

#include "pviheat/ratfunc.hpp"

namespace pviheat {

/// A named map variable -> RatFunc, extended to all rational functions by
/// linearity, the Leibniz rule and the quotient rule.  Variables with no
/// stored image map to zero, except the inert ones: asking for the derivative
/// of an expression that depends on an inert symbol is a hard error.
class Derivation {
public:
    Derivation() = default;

    Derivation& set_image(Var v, RatFunc image);
    Derivation& set_inert(Var v);

    /// The coordinate derivation d/dv (image v -> 1, all else 0).
    static Derivation coordinate(Var v);

    RatFunc apply(const MultiPoly& f) const;
    RatFunc apply(const RatFunc& f) const;
    RatFunc operator()(const RatFunc& f) const { return apply(f); }

private:
    std::map<Var, RatFunc> images_;
    std::set<Var> inert_;
};

}  // namespace pviheat

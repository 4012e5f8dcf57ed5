#pragma once

#include <optional>
#include <utility>

#include "pviheat/derivation.hpp"
#include "pviheat/linop.hpp"

namespace pviheat {

/// Marker for the point at infinity.
struct AtInfinity {};

/// Local exponents of a second-order operator c_tt = 1, c_x = 0 at a regular
/// singular point: the two roots of rho(rho-1) + p0*rho + q0 = 0 where
/// p0 = lim (t-c) c_t and q0 = lim (t-c)^2 c_0 (standard s = 1/t chart at
/// infinity, exponents listed in the psi ~ t^(-rho) convention there).
/// Throws KernelError at an irregular singularity or when the exponent
/// discriminant is not a perfect square over the remaining symbols.
std::pair<RatFunc, RatFunc> indicial_exponents(const LinOp& op, const RatFunc& point);
std::pair<RatFunc, RatFunc> indicial_exponents(const LinOp& op, AtInfinity);

/// Resonance obstruction of the Frobenius recursion at `point`, started at
/// `smaller_exponent`, at the integer resonance `gap`: the quantity that must
/// vanish for a log-free solution.  Throws on gap <= 0 and when the recursion
/// is blocked before the resonance.
RatFunc frobenius_obstruction(const LinOp& op, const RatFunc& point,
                              const RatFunc& smaller_exponent, int gap);

/// k-th Taylor coefficient of f at t = c (t-derivatives over k!).
RatFunc taylor_coeff_t(const RatFunc& f, const RatFunc& c, int k);

}  // namespace pviheat

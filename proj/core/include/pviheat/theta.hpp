#pragma once

#include "pviheat/ratfunc.hpp"

namespace pviheat {

/// Monodromy exponents, each either the corresponding symbolic variable or an
/// exact rational constant.
struct Theta {
    RatFunc inf, zero, one, x;

    static Theta symbolic() {
        return {var(Var::th_inf), var(Var::th_0), var(Var::th_1), var(Var::th_x)};
    }
    static Theta rational(const Rational& t_inf, const Rational& t0, const Rational& t1,
                          const Rational& tx) {
        return {RatFunc(t_inf), RatFunc(t0), RatFunc(t1), RatFunc(tx)};
    }
    bool is_symbolic() const { return inf.depends_on(Var::th_inf); }
};

/// Parameters of the second-order nonlinear flow:
/// (2 alpha, -2 beta, 2 gamma, 1 - 2 delta) = (th_inf^2, th_0^2, th_1^2, th_x^2).
struct PviParams {
    RatFunc alpha, beta, gamma, delta;
};

/// Parameters of the linear Fuchsian side:
/// (2 alpha, -2 beta, 2 gamma, 1 - 2 delta) = (4(A+B+C+E+1), 4A+1, 4B+1, 4C+1).
struct FuchsParams {
    RatFunc A, B, C, E;
};

std::pair<PviParams, FuchsParams> theta_correspondence(const Theta& theta);

/// The two linear parameter maps, inverse to one another.
FuchsParams fuchs_from_pvi(const PviParams& p);
PviParams pvi_from_fuchs(const FuchsParams& f);

}  // namespace pviheat

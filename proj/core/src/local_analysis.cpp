#include "pviheat/local_analysis.hpp"

#include <vector>

#include "pviheat/errors.hpp"

namespace pviheat {
namespace {

void require_normalized_ode(const LinOp& op) {
    if (!(op.c_tt == RatFunc(1L)) || !op.c_x.is_zero())
        throw KernelError("local analysis expects a monic t-ODE (c_tt = 1, c_x = 0)");
}

/// Limit of (t - c)^k * f at t = c; throws on an irregular singularity.
RatFunc regular_limit(const RatFunc& f, const RatFunc& c, int k) {
    RatFunc g = (var(Var::t) - c).pow(k) * f;
    try {
        return subst(g, Var::t, c);
    } catch (const KernelError&) {
        throw KernelError("irregular singularity: limit of (t-c)^" + std::to_string(k) +
                          " * coefficient does not exist at t = " + c.to_string());
    }
}

/// Limit of t^k * f at t -> infinity.
RatFunc limit_at_infinity(const RatFunc& f, int k) {
    if (f.is_zero()) return RatFunc();
    const int dn = f.num().degree(Var::t) + k;
    const int dd = f.den().degree(Var::t);
    if (dn < dd) return RatFunc();
    if (dn > dd)
        throw KernelError("irregular singularity at t = infinity");
    auto lead = [](const MultiPoly& p) { return p.coefficients_in(Var::t).back(); };
    return RatFunc(lead(f.num())) / RatFunc(lead(f.den()));
}

RatFunc ratfunc_sqrt(const RatFunc& f) {
    auto n = poly_sqrt(f.num());
    auto d = poly_sqrt(f.den());
    if (!n || !d)
        throw KernelError("indicial discriminant is not a perfect square: " + f.to_string());
    return RatFunc(*n) / RatFunc(*d);
}

std::pair<RatFunc, RatFunc> indicial_roots(const RatFunc& p0, const RatFunc& q0) {
    // rho(rho - 1) + p0 rho + q0 = 0
    const RatFunc b = p0 - RatFunc(1L);
    const RatFunc s = ratfunc_sqrt(b * b - RatFunc(4L) * q0);
    const RatFunc half = RatFunc(rat(1, 2));
    return {half * (-b - s), half * (-b + s)};
}

}  // namespace

std::pair<RatFunc, RatFunc> indicial_exponents(const LinOp& op, const RatFunc& point) {
    require_normalized_ode(op);
    const RatFunc p0 = regular_limit(op.c_t, point, 1);
    const RatFunc q0 = regular_limit(op.c_0, point, 2);
    return indicial_roots(p0, q0);
}

std::pair<RatFunc, RatFunc> indicial_exponents(const LinOp& op, AtInfinity) {
    require_normalized_ode(op);
    const RatFunc p_inf = limit_at_infinity(op.c_t, 1);
    const RatFunc q_inf = limit_at_infinity(op.c_0, 2);
    // Exponents listed the way the classical Riemann scheme does:
    // alpha^2 - (1 - p_inf) alpha + q_inf = 0.
    return indicial_roots(p_inf, q_inf);
}

RatFunc taylor_coeff_t(const RatFunc& f, const RatFunc& c, int k) {
    const Derivation dt = Derivation::coordinate(Var::t);
    RatFunc g = f;
    Rational factorial(1);
    for (int i = 1; i <= k; ++i) {
        g = dt(g);
        factorial *= i;
    }
    return subst(g, Var::t, c) / RatFunc(factorial);
}

RatFunc frobenius_obstruction(const LinOp& op, const RatFunc& point,
                              const RatFunc& smaller_exponent, int gap) {
    require_normalized_ode(op);
    if (gap <= 0) throw KernelError("resonance gap must be a positive integer");

    // Laurent data: p_k for k >= -1 from (t-c) c_t, q_k for k >= -2 from (t-c)^2 c_0.
    const RatFunc pseries = (var(Var::t) - point) * op.c_t;
    const RatFunc qseries = (var(Var::t) - point).pow(2) * op.c_0;
    std::vector<RatFunc> p(static_cast<std::size_t>(gap) + 1), q(static_cast<std::size_t>(gap) + 1);
    for (int j = 0; j <= gap; ++j) {
        p[static_cast<std::size_t>(j)] = taylor_coeff_t(pseries, point, j);  // p_{j-1}
        q[static_cast<std::size_t>(j)] = taylor_coeff_t(qseries, point, j);  // q_{j-2}
    }
    auto indicial = [&](const RatFunc& rho) {
        return rho * (rho - RatFunc(1L)) + p[0] * rho + q[0];
    };

    const RatFunc& rho = smaller_exponent;
    std::vector<RatFunc> a(static_cast<std::size_t>(gap), RatFunc());
    a[0] = RatFunc(1L);
    auto recursion_rhs = [&](int n) {
        RatFunc acc;
        for (int m = 0; m < n; ++m) {
            const RatFunc rm = rho + RatFunc(Rational(m));
            acc += a[static_cast<std::size_t>(m)] *
                   (rm * p[static_cast<std::size_t>(n - m)] + q[static_cast<std::size_t>(n - m)]);
        }
        return acc;
    };
    for (int n = 1; n < gap; ++n) {
        RatFunc in = indicial(rho + RatFunc(Rational(n)));
        if (in.is_zero())
            throw KernelError("Frobenius recursion blocked by an intermediate resonance at n = " +
                              std::to_string(n));
        a[static_cast<std::size_t>(n)] = -recursion_rhs(n) / in;
    }
    return recursion_rhs(gap);
}

}  // namespace pviheat

#include "pviheat/numerics/elliptic.hpp"

#include <cmath>
#include <numbers>

#include "pviheat/elimination.hpp"

namespace pviheat::numerics {

double elliptic_K_agm(double k) {
    if (!(k >= 0.0) || k >= 1.0)
        throw NumericError("elliptic modulus must satisfy 0 <= k < 1");
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    // Quadratic convergence: well under 40 rounds for any k in [0, 1); the
    // iteration cap matters because |a - b| can stall one ulp above any
    // too-tight threshold.
    for (int i = 0; i < 40 && std::abs(a - b) > 1e-15 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return std::numbers::pi / (2.0 * a);
}

HypDerivatives hyp_half_series(double t) {
    if (!(t >= 0.0) || t > 0.95)
        throw NumericError("series argument outside [0, 0.95]");
    if (t == 0.0) return {1.0, 0.25, 9.0 / 32.0};
    double a = 1.0;  // a_n
    double f = 0, df = 0, d2f = 0, tp = 1;  // tp = t^n
    for (int n = 0;; ++n) {
        const double term = a * tp;
        f += term;
        if (n >= 1) df += n * a * tp / t;
        if (n >= 2) d2f += static_cast<double>(n) * (n - 1) * a * tp / (t * t);
        if (n > 4 && std::abs(term) * n * n < 1e-18 * std::abs(f)) break;
        if (n > 200000) throw NumericError("hypergeometric series converges too slowly");
        const double ratio = (n + 0.5) / (n + 1.0);
        a *= ratio * ratio;
        tp *= t;
    }
    return {f, df, d2f};
}

double legendre_check(const std::vector<double>& t_points) {
    const LinOp op = picard_reduction();
    double worst = 0;
    for (double t : t_points) {
        if (!(t > 0.0) || t >= 1.0)
            throw NumericError("check points must lie strictly inside (0, 1)");
        const HypDerivatives hd = hyp_half_series(t);
        const double psi = (2.0 / std::numbers::pi) * elliptic_K_agm(std::sqrt(t));
        if (std::abs(psi - hd.f) > 1e-12 * std::abs(psi))
            throw NumericError("series and AGM evaluations disagree");
        std::array<double, kNumVars> p{};
        p[static_cast<std::size_t>(Var::t)] = t;
        const double residual = op.c_tt.eval_double(p) * hd.d2f +
                                op.c_t.eval_double(p) * hd.df +
                                op.c_0.eval_double(p) * psi;
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

}  // namespace pviheat::numerics

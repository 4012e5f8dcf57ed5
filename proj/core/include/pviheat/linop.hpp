#pragma once

#include "pviheat/ratfunc.hpp"

namespace pviheat {

/// Linear differential operator on the basis {d^2/dt^2, d/dt, d/dx, identity}.
/// Equality is coefficientwise equality of reduced rational functions.
struct LinOp {
    RatFunc c_tt, c_t, c_x, c_0;

    friend LinOp operator+(const LinOp& a, const LinOp& b) {
        return {a.c_tt + b.c_tt, a.c_t + b.c_t, a.c_x + b.c_x, a.c_0 + b.c_0};
    }
    friend LinOp operator-(const LinOp& a, const LinOp& b) {
        return {a.c_tt - b.c_tt, a.c_t - b.c_t, a.c_x - b.c_x, a.c_0 - b.c_0};
    }
    /// Scaling by a nonzero rational function; preserves the kernel.
    friend LinOp operator*(const RatFunc& s, const LinOp& op) {
        return {s * op.c_tt, s * op.c_t, s * op.c_x, s * op.c_0};
    }
    friend bool operator==(const LinOp& a, const LinOp& b) {
        return a.c_tt == b.c_tt && a.c_t == b.c_t && a.c_x == b.c_x && a.c_0 == b.c_0;
    }
};

/// Logarithmic derivatives of a gauge prefactor.  Fractional powers are never
/// materialized; branch choices are immaterial by construction.
struct GaugeLog {
    RatFunc lam_t;  // d/dt log of the prefactor
    RatFunc lam_x;  // total d/dx log of the prefactor (x-flow on u)
};

}  // namespace pviheat

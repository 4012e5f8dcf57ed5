#pragma once

#include "pviheat/numerics/rk.hpp"
#include "pviheat/theta.hpp"

namespace pviheat::numerics {

struct Tolerances {
    double rtol = 1e-10;
    double atol = 1e-12;
    double exclusion_radius = 1e-3;  // distance kept from the singular locus
    double blowup = 1e8;             // |u| beyond this counts as a movable pole
    int richardson_levels = 2;
};

/// Dense-output solution of the nonlinear flow for one rational parameter
/// point.  Immutable after integration.
struct PviTrajectory {
    Theta theta;
    OdeSolution<2> sol;  // state (u, u')
    Tolerances tol;

    double u(double x) const { return sol.eval(x)[0]; }
    double u1(double x) const { return sol.eval(x)[1]; }
    double x_begin() const { return sol.x_begin(); }
    double x_end() const { return sol.x_end(); }
    const std::string& termination() const { return sol.termination; }

    /// True when [a, b] lies inside the integrated span.
    bool covers(double a, double b) const;
};

/// Adaptive integration of the second-order flow as the first-order system
/// (u, u').  Stops cleanly at the singular locus or at a movable pole.
/// The fixed-step variant exists for the self-convergence oracle only.
PviTrajectory integrate_pvi(const Theta& theta, double x0, double u0, double u1_0,
                            double x_end, const Tolerances& tol = {},
                            bool fixed_step = false, double fixed_h = 1e-3);

}  // namespace pviheat::numerics

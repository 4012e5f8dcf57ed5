#pragma once

#include <vector>

namespace pviheat::numerics {

/// Complete elliptic integral of the first kind via the arithmetic-geometric
/// mean; relative error below 1e-14 on [0, 1).
double elliptic_K_agm(double k);

struct HypDerivatives {
    double f, df, d2f;
};

/// 2F1(1/2, 1/2; 1; t) and its first two derivatives, summed term by term.
/// Valid for 0 <= t < 1; throws on slow convergence near t = 1.
HypDerivatives hyp_half_series(double t);

/// Plugs Psi(t) = (2/pi) K(sqrt(t)) (AGM value, series derivatives) into the
/// elliptic-period reduction of the final operator and returns the largest
/// absolute residual over the points.
double legendre_check(const std::vector<double>& t_points);

}  // namespace pviheat::numerics

#pragma once

#include <vector>

#include "pviheat/linop.hpp"
#include "pviheat/numerics/pvi_flow.hpp"

namespace pviheat::numerics {

/// Per-node wave data (Psi, dPsi/dt) at one deformation value.
struct WaveGrid {
    double x = 0;
    std::vector<double> t_nodes;
    std::vector<std::array<double, 2>> values;
};

/// Compiled coefficient functions of the transformed pair for one rational
/// parameter point, with the gauge derivative specialized to the g = 0 choice
/// gp = -F/(x(x-1)) so that the transport stays inside the heat equation's
/// solution space.
class WaveSystem {
public:
    explicit WaveSystem(const Theta& theta);

    /// Initial data along t at fixed x: integrates the t-equation from the
    /// first node so that every node lies on one analytic solution.
    WaveGrid make_grid(const PviTrajectory& traj, double x,
                       const std::vector<double>& t_nodes,
                       const std::array<double, 2>& seed,
                       const Tolerances& tol) const;

    /// Evolves every node in x via the x-equation and its t-derivative
    /// (a closed 2x2 linear system per node; no finite differences).
    WaveGrid transport(const PviTrajectory& traj, const WaveGrid& grid, double x_target,
                       const Tolerances& tol) const;

    /// (Psi_t, Psi_tt) reconstructed from the t-equation at a grid node.
    std::array<double, 2> t_derivatives(const PviTrajectory& traj, const WaveGrid& grid,
                                        std::size_t node) const;

    const Theta& theta() const { return theta_; }

private:
    Theta theta_;
    RatFunc ct12_, c012_;              // t-equation coefficients
    RatFunc m11_, m12_, m21_, m22_;    // x-transport matrix entries
    void check_exclusion(const PviTrajectory& traj, double x, double t_node,
                         double radius) const;
};

struct HeatResidual {
    double t = 0, x = 0;
    double residual_h = 0, residual_h2 = 0;
    double order = 0;
};

/// Residual of the final operator on a transported wave function, with the
/// x-derivative from a centered difference at spacings h and h/2.  The
/// operator must come from the exact pipeline (a code path disjoint from the
/// transport above).
HeatResidual heat_residual(const WaveSystem& sys, const PviTrajectory& traj,
                           const WaveGrid& grid, std::size_t node, double h,
                           const LinOp& heat_op, const Tolerances& tol);

}  // namespace pviheat::numerics

#include "pviheat/numerics/wave.hpp"

#include <cmath>
#include <string>

#include "pviheat/elimination.hpp"

namespace pviheat::numerics {
namespace {

std::array<double, kNumVars> point_at(double t, double x, double u, double u1) {
    std::array<double, kNumVars> p{};
    p[static_cast<std::size_t>(Var::t)] = t;
    p[static_cast<std::size_t>(Var::x)] = x;
    p[static_cast<std::size_t>(Var::u)] = u;
    p[static_cast<std::size_t>(Var::u1)] = u1;
    return p;
}

}  // namespace

WaveSystem::WaveSystem(const Theta& theta) : theta_(theta) {
    if (theta.is_symbolic())
        throw NumericError("wave transport needs a rational parameter point");
    const RatFunc one(1L);
    const RatFunc x = var(Var::x);
    const LinOp t_eq = transformed_t_template(theta);
    ct12_ = t_eq.c_t;
    c012_ = t_eq.c_0;

    LinOp x_eq = transformed_x_template(theta);
    // g = 0 gauge: gp = -F/(x(x-1)), matching the operator the residual is
    // checked against.
    const RatFunc gp_value = -compute_F(theta) / (x * (x - one));
    x_eq.c_0 = subst(x_eq.c_0, Var::gp, gp_value);

    const RatFunc scale = x * (x - one);
    m11_ = -x_eq.c_0 / scale;
    m12_ = -x_eq.c_t / scale;
    const Derivation dt = Derivation::coordinate(Var::t);
    m21_ = dt(m11_) - m12_ * c012_;
    m22_ = m11_ + dt(m12_) - m12_ * ct12_;
}

void WaveSystem::check_exclusion(const PviTrajectory& traj, double x, double t_node,
                                 double radius) const {
    const double u = traj.u(x);
    if (std::abs(t_node) < radius || std::abs(t_node - 1) < radius ||
        std::abs(t_node - x) < radius || std::abs(t_node - u) < radius)
        throw NumericError("grid node t = " + std::to_string(t_node) +
                           " enters the exclusion zone at x = " + std::to_string(x));
}

WaveGrid WaveSystem::make_grid(const PviTrajectory& traj, double x,
                               const std::vector<double>& t_nodes,
                               const std::array<double, 2>& seed,
                               const Tolerances& tol) const {
    if (t_nodes.empty()) throw NumericError("empty node list");
    const double u = traj.u(x), u1 = traj.u1(x);
    auto f = [&](double t, const std::array<double, 2>& y) {
        const auto p = point_at(t, x, u, u1);
        return std::array<double, 2>{
            y[1], -ct12_.eval_double(p) * y[1] - c012_.eval_double(p) * y[0]};
    };
    WaveGrid grid;
    grid.x = x;
    grid.t_nodes = t_nodes;
    grid.values.resize(t_nodes.size());
    for (double t : t_nodes) check_exclusion(traj, x, t, tol.exclusion_radius);

    std::array<double, 2> y = seed;
    grid.values[0] = y;
    IntegrateOptions<2> opt;
    opt.rtol = tol.rtol;
    opt.atol = tol.atol;
    for (std::size_t i = 1; i < t_nodes.size(); ++i) {
        auto sol = integrate_dp5<2>(f, t_nodes[i - 1], y, t_nodes[i], opt);
        if (sol.termination != "reached endpoint")
            throw NumericError("t-integration stopped: " + sol.termination);
        y = sol.final_state;
        grid.values[i] = y;
    }
    return grid;
}

WaveGrid WaveSystem::transport(const PviTrajectory& traj, const WaveGrid& grid,
                               double x_target, const Tolerances& tol) const {
    if (!traj.covers(grid.x, x_target))
        throw NumericError("transport interval leaves the integrated trajectory span");
    WaveGrid out;
    out.x = x_target;
    out.t_nodes = grid.t_nodes;
    out.values.resize(grid.values.size());

    for (std::size_t i = 0; i < grid.t_nodes.size(); ++i) {
        const double t = grid.t_nodes[i];
        auto f = [&](double x, const std::array<double, 2>& y) {
            const auto p = point_at(t, x, traj.u(x), traj.u1(x));
            return std::array<double, 2>{
                m11_.eval_double(p) * y[0] + m12_.eval_double(p) * y[1],
                m21_.eval_double(p) * y[0] + m22_.eval_double(p) * y[1]};
        };
        IntegrateOptions<2> opt;
        opt.rtol = tol.rtol;
        opt.atol = tol.atol;
        opt.stop = [&, t](double x, const std::array<double, 2>&)
            -> std::optional<std::string> {
            const double u = traj.u(x);
            if (std::abs(t - u) < tol.exclusion_radius ||
                std::abs(t - x) < tol.exclusion_radius)
                return "exclusion zone";
            return std::nullopt;
        };
        auto sol = integrate_dp5<2>(f, grid.x, grid.values[i], x_target, opt);
        if (sol.termination != "reached endpoint")
            throw NumericError("node t = " + std::to_string(t) +
                               " stopped at x = " + std::to_string(sol.x_end()) + ": " +
                               sol.termination);
        out.values[i] = sol.final_state;
    }
    return out;
}

std::array<double, 2> WaveSystem::t_derivatives(const PviTrajectory& traj,
                                                const WaveGrid& grid,
                                                std::size_t node) const {
    const double t = grid.t_nodes.at(node);
    const auto p = point_at(t, grid.x, traj.u(grid.x), traj.u1(grid.x));
    const double psi = grid.values[node][0], psi_t = grid.values[node][1];
    const double psi_tt =
        -ct12_.eval_double(p) * psi_t - c012_.eval_double(p) * psi;
    return {psi_t, psi_tt};
}

HeatResidual heat_residual(const WaveSystem& sys, const PviTrajectory& traj,
                           const WaveGrid& grid, std::size_t node, double h,
                           const LinOp& heat_op, const Tolerances& tol) {
    const double t = grid.t_nodes.at(node);
    const double x = grid.x;
    const auto p = point_at(t, x, traj.u(x), traj.u1(x));
    const double psi = grid.values[node][0];
    const auto [psi_t, psi_tt] = sys.t_derivatives(traj, grid, node);

    auto fd_residual = [&](double step) {
        const WaveGrid plus = sys.transport(traj, grid, x + step, tol);
        const WaveGrid minus = sys.transport(traj, grid, x - step, tol);
        const double psi_x = (plus.values[node][0] - minus.values[node][0]) / (2 * step);
        return heat_op.c_x.eval_double(p) * psi_x + heat_op.c_tt.eval_double(p) * psi_tt +
               heat_op.c_t.eval_double(p) * psi_t + heat_op.c_0.eval_double(p) * psi;
    };

    HeatResidual out;
    out.t = t;
    out.x = x;
    out.residual_h = fd_residual(h);
    out.residual_h2 = fd_residual(h / 2);
    out.order = std::log2(std::abs(out.residual_h) /
                          std::max(std::abs(out.residual_h2), 1e-300));
    return out;
}

}  // namespace pviheat::numerics

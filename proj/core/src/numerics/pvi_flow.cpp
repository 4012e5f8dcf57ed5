#include "pviheat/numerics/pvi_flow.hpp"

#include <cmath>

#include "pviheat/lax.hpp"

namespace pviheat::numerics {

bool PviTrajectory::covers(double a, double b) const {
    const double lo = std::min(x_begin(), x_end());
    const double hi = std::max(x_begin(), x_end());
    return lo <= std::min(a, b) && std::max(a, b) <= hi;
}

PviTrajectory integrate_pvi(const Theta& theta, double x0, double u0, double u1_0,
                            double x_end, const Tolerances& tol, bool fixed_step,
                            double fixed_h) {
    if (theta.is_symbolic())
        throw NumericError("numeric integration needs a rational parameter point");
    const double r = tol.exclusion_radius;
    auto off_locus = [r](double x, double u) {
        return std::abs(u) >= r && std::abs(u - 1) >= r && std::abs(u - x) >= r &&
               std::abs(x) >= r && std::abs(x - 1) >= r;
    };
    if (!off_locus(x0, u0))
        throw NumericError("initial point lies on (or within the exclusion radius of) "
                           "the singular locus");

    const PviParams prm = theta_correspondence(theta).first;
    const RatFunc rhs = pvi_rhs(var(Var::x), var(Var::u), var(Var::u1), prm);

    auto f = [&rhs](double x, const std::array<double, 2>& y) {
        std::array<double, kNumVars> point{};
        point[static_cast<std::size_t>(Var::x)] = x;
        point[static_cast<std::size_t>(Var::u)] = y[0];
        point[static_cast<std::size_t>(Var::u1)] = y[1];
        return std::array<double, 2>{y[1], rhs.eval_double(point)};
    };

    IntegrateOptions<2> opt;
    opt.rtol = tol.rtol;
    opt.atol = tol.atol;
    opt.fixed_step = fixed_step;
    opt.fixed_h = fixed_h;
    opt.stop = [off_locus, blowup = tol.blowup](double x, const std::array<double, 2>& y)
        -> std::optional<std::string> {
        if (std::abs(y[0]) > blowup || !off_locus(x, y[0]))
            return "approached singular locus";
        return std::nullopt;
    };

    PviTrajectory traj;
    traj.theta = theta;
    traj.tol = tol;
    traj.sol = integrate_dp5<2>(f, x0, {u0, u1_0}, x_end, opt);
    return traj;
}

}  // namespace pviheat::numerics

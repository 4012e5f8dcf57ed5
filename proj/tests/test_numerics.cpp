#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pviheat/elimination.hpp"
#include "pviheat/numerics/elliptic.hpp"
#include "pviheat/numerics/wave.hpp"

namespace {

using namespace pviheat;
namespace num = pviheat::numerics;

Theta sample_theta() {
    return Theta::rational(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7));
}

}  // namespace

TEST_CASE("integrator: fifth-order self-convergence on a known solution") {
    auto rhs = [](double, const std::array<double, 1>& y) {
        return std::array<double, 1>{y[0]};
    };
    auto error_at = [&](double h) {
        num::IntegrateOptions<1> opt;
        opt.fixed_step = true;
        opt.fixed_h = h;
        const auto sol = num::integrate_dp5(rhs, 0.0, std::array<double, 1>{1.0}, 2.0, opt);
        return std::abs(sol.final_state[0] - std::exp(2.0));
    };
    const double e1 = error_at(0.2), e2 = error_at(0.1);
    const double order = std::log2(e1 / e2);
    CHECK(order > 4.3);
    CHECK(order < 5.7);
}

TEST_CASE("integrator: dense output is accurate between steps") {
    auto rhs = [](double x, const std::array<double, 1>&) {
        return std::array<double, 1>{std::cos(x)};
    };
    num::IntegrateOptions<1> opt;
    const auto sol = num::integrate_dp5(rhs, 0.0, std::array<double, 1>{0.0}, 3.0, opt);
    REQUIRE(sol.termination == "reached endpoint");
    for (double x = 0.1; x < 3.0; x += 0.37)
        CHECK(std::abs(sol.eval(x)[0] - std::sin(x)) < 1e-9);
}

TEST_CASE("nonlinear flow: vanishing right side keeps the trajectory constant") {
    // With these exponents all four nonlinear coefficients vanish, so every
    // constant away from the fixed singularities solves the equation.
    const Theta th = Theta::rational(rat(0), rat(0), rat(0), rat(1));
    const num::PviTrajectory traj = num::integrate_pvi(th, 3.0, 2.0, 0.0, 4.0);
    CHECK(traj.termination() == "reached endpoint");
    CHECK(std::abs(traj.u(4.0) - 2.0) < 1e-12);
    CHECK(std::abs(traj.u1(3.7)) < 1e-12);
}

TEST_CASE("nonlinear flow: initial data on the singular locus is rejected") {
    CHECK_THROWS_AS((void)num::integrate_pvi(sample_theta(), 3.0, 3.0, 0.5, 4.0),
                    NumericError);
    CHECK_THROWS_AS((void)num::integrate_pvi(sample_theta(), 1.0, 2.0, 0.5, 4.0),
                    NumericError);
}

TEST_CASE("one-parameter family: the defining form is a numeric invariant") {
    // Exponents on the locus K = 0, initial slope solving the first-order
    // equation; the form must then vanish along the whole trajectory.
    const double t0 = 0.5, t1 = 1.0 / 3.0, tx = 0.2;
    const Theta th = Theta::rational(rat(-1, 30), rat(1, 2), rat(1, 3), rat(1, 5));
    const double x0 = 3.0, u0 = 2.0;
    auto slope = [&](double x, double u) {
        return -(t0 * (u - 1) * (u - x) + t1 * u * (u - x) + (tx - 1) * u * (u - 1)) /
               (x * (x - 1));
    };
    const num::PviTrajectory traj =
        num::integrate_pvi(th, x0, u0, slope(x0, u0), 4.0);
    REQUIRE(traj.termination() == "reached endpoint");
    for (double x = x0; x <= 4.0; x += 0.02) {
        const double u = traj.u(x), u1 = traj.u1(x);
        const double form = x * (x - 1) * u1 + t0 * (u - 1) * (u - x) +
                            t1 * u * (u - x) + (tx - 1) * u * (u - 1);
        CHECK(std::abs(form) <= 1e-8 * (1.0 + std::abs(u * u * u)));
    }
}

TEST_CASE("wave transport: zero data and linearity") {
    const Theta th = sample_theta();
    const num::Tolerances tol;
    const num::PviTrajectory traj = num::integrate_pvi(th, 3.0, 2.0, 0.5, 4.0);
    const num::WaveSystem sys(th);
    const std::vector<double> nodes = {5.0, 5.5, 6.0, 6.5, 7.0};

    const num::WaveGrid zero = sys.make_grid(traj, 3.5, nodes, {0.0, 0.0}, tol);
    const num::WaveGrid zero_out = sys.transport(traj, zero, 3.6, tol);
    for (const auto& v : zero_out.values) {
        CHECK(v[0] == 0.0);
        CHECK(v[1] == 0.0);
    }

    const num::WaveGrid g1 = sys.make_grid(traj, 3.5, nodes, {1.0, 0.3}, tol);
    const num::WaveGrid g2 = sys.make_grid(traj, 3.5, nodes, {2.0, 0.6}, tol);
    const num::WaveGrid o1 = sys.transport(traj, g1, 3.6, tol);
    const num::WaveGrid o2 = sys.transport(traj, g2, 3.6, tol);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(o2.values[i][j] ==
                  doctest::Approx(2.0 * o1.values[i][j]).epsilon(1e-8));
}

TEST_CASE("final equation holds on transported waves at second order") {
    const Theta th = sample_theta();
    const num::Tolerances tol;
    const num::PviTrajectory traj = num::integrate_pvi(th, 3.0, 2.0, 0.5, 4.0);
    const num::WaveSystem sys(th);
    const std::vector<double> nodes = {5.0, 5.5, 6.0, 6.5, 7.0};
    const num::WaveGrid grid = sys.make_grid(traj, 3.5, nodes, {1.0, 0.3}, tol);
    const LinOp heat = heat_operator(th, GaugeChoice::zero).first;

    const num::HeatResidual r = num::heat_residual(sys, traj, grid, 2, 0.05, heat, tol);
    CHECK(r.order >= 1.9);
    const double ratio = std::abs(r.residual_h / r.residual_h2);
    CHECK(ratio > 3.3);
    CHECK(ratio < 4.7);

    // Sanity of the oracle itself: a wrong potential destroys the
    // h-convergence (the residual saturates at an O(1) value).
    LinOp wrong = heat;
    wrong.c_0 += RatFunc(1L);
    const num::HeatResidual bad =
        num::heat_residual(sys, traj, grid, 2, 0.05, wrong, tol);
    CHECK(bad.order < 1.0);
}

TEST_CASE("elliptic integral: reference values and domain guard") {
    CHECK(num::elliptic_K_agm(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
    CHECK(std::abs(num::elliptic_K_agm(std::sqrt(0.5)) - 1.854074677301372) < 1e-12);
    CHECK_THROWS_AS((void)num::elliptic_K_agm(1.0), NumericError);
    CHECK_THROWS_AS((void)num::elliptic_K_agm(-0.1), NumericError);
}

TEST_CASE("series and AGM evaluations agree") {
    const num::HypDerivatives hd = num::hyp_half_series(0.5);
    const double psi = (2.0 / std::numbers::pi) * num::elliptic_K_agm(std::sqrt(0.5));
    CHECK(std::abs(hd.f - 1.1803405990160) < 1e-10);
    CHECK(std::abs(hd.f - psi) < 1e-13);
    CHECK_THROWS_AS((void)num::hyp_half_series(0.99), NumericError);
}

TEST_CASE("elliptic-period reduction annihilates the period numerically") {
    CHECK(num::legendre_check({0.25, 0.5, 0.75}) <= 1e-10);

    // A wrong potential leaves an O(1) residual.
    const num::HypDerivatives hd = num::hyp_half_series(0.5);
    const double psi = (2.0 / std::numbers::pi) * num::elliptic_K_agm(std::sqrt(0.5));
    const double t = 0.5;
    const double residual = t * (t - 1) * hd.d2f + (2 * t - 1) * hd.df + 0.5 * psi;
    CHECK(std::abs(residual) > 1e-2);
}

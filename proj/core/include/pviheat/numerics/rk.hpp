#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pviheat/errors.hpp"

namespace pviheat::numerics {

/// Dormand-Prince 5(4) with the classical quartic dense-output polynomial.
/// One interpolation segment per accepted step.
template <std::size_t N>
struct OdeSolution {
    using State = std::array<double, N>;

    struct Segment {
        double x0, h;
        std::array<State, 5> rcont;  // Horner data of the dense polynomial
    };

    std::vector<Segment> segments;
    std::vector<double> xs;  // accepted step endpoints, xs.front() = start
    State final_state{};
    std::string termination;  // reached endpoint | approached singular locus | step underflow
    int accepted = 0, rejected = 0;

    double x_begin() const { return xs.front(); }
    double x_end() const { return xs.back(); }

    State eval(double x) const {
        if (segments.empty()) throw NumericError("empty solution");
        // Bisect on segment start points.
        std::size_t lo = 0, hi = segments.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi + 1) / 2;
            const bool forward = segments.front().h > 0;
            if (forward ? segments[mid].x0 <= x : segments[mid].x0 >= x)
                lo = mid;
            else
                hi = mid - 1;
        }
        const Segment& s = segments[lo];
        const double th = (x - s.x0) / s.h;
        const double th1 = 1.0 - th;
        State y;
        for (std::size_t i = 0; i < N; ++i)
            y[i] = s.rcont[0][i] +
                   th * (s.rcont[1][i] +
                         th1 * (s.rcont[2][i] +
                                th * (s.rcont[3][i] + th1 * s.rcont[4][i])));
        return y;
    }
};

template <std::size_t N>
struct IntegrateOptions {
    double rtol = 1e-10, atol = 1e-12;
    double h_init = 1e-3;
    double h_min = 1e-14;  // below this the step has underflowed
    bool fixed_step = false;
    double fixed_h = 1e-3;
    /// Checked at every accepted step; a returned string stops the integration
    /// with that termination reason.
    std::function<std::optional<std::string>(double, const std::array<double, N>&)> stop;
};

template <std::size_t N, class F>
OdeSolution<N> integrate_dp5(F&& f, double x0, std::array<double, N> y0, double x_end,
                             const IntegrateOptions<N>& opt) {
    using State = std::array<double, N>;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    static constexpr double d1 = -12715105075.0 / 11282082432.0,
                            d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0,
                            d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0,
                            d7 = 69997945.0 / 29380423.0;

    OdeSolution<N> sol;
    sol.xs.push_back(x0);
    const double dir = x_end > x0 ? 1.0 : -1.0;
    double x = x0;
    State y = y0;
    State k1 = f(x, y);
    double h = opt.fixed_step ? opt.fixed_h : opt.h_init;
    h = dir * std::abs(h);

    while (dir * (x_end - x) > 0) {
        if (dir * (x + h - x_end) > 0) h = x_end - x;
        State yt, k2, k3, k4, k5, k6, k7, y1;
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        k2 = f(x + c2 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(x + c3 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(x + c4 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(x + c5 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                a65 * k5[i]);
        k6 = f(x + h, yt);
        for (std::size_t i = 0; i < N; ++i)
            y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                b6 * k6[i]);
        k7 = f(x + h, y1);

        double err = 0;
        for (std::size_t i = 0; i < N; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                  e6 * k6[i] + e7 * k7[i]);
            const double sc =
                opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
            err += (e / sc) * (e / sc);
        }
        err = std::sqrt(err / N);

        if (!opt.fixed_step && err > 1.0) {
            ++sol.rejected;
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            if (std::abs(h) < opt.h_min) {
                sol.termination = "step underflow";
                break;
            }
            continue;
        }

        typename OdeSolution<N>::Segment seg;
        seg.x0 = x;
        seg.h = h;
        for (std::size_t i = 0; i < N; ++i) {
            const double dy = y1[i] - y[i];
            const double bspl = h * k1[i] - dy;
            seg.rcont[0][i] = y[i];
            seg.rcont[1][i] = dy;
            seg.rcont[2][i] = bspl;
            seg.rcont[3][i] = dy - h * k7[i] - bspl;
            seg.rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                   d6 * k6[i] + d7 * k7[i]);
        }
        sol.segments.push_back(seg);
        ++sol.accepted;
        x += h;
        y = y1;
        k1 = k7;  // FSAL
        sol.xs.push_back(x);

        if (opt.stop)
            if (auto reason = opt.stop(x, y)) {
                sol.termination = *reason;
                break;
            }
        if (!opt.fixed_step) {
            h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-16), -0.2)));
            if (std::abs(h) < opt.h_min) {
                sol.termination = "step underflow";
                break;
            }
        }
    }
    if (sol.termination.empty()) sol.termination = "reached endpoint";
    sol.final_state = y;
    return sol;
}

}  // namespace pviheat::numerics

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pviheat/gauge.hpp"

namespace pviheat {

/// The combined equation after removal of the apparent pole, plus the data
/// the later steps need.
struct EliminationStep {
    LinOp L15;       // L1p + lambda13 * L2p, free of the pole at t = u
    RatFunc lambda13;
    RatFunc F;       // the t-free carrier of all remaining u, u1 dependence
};

/// Finds the multiplier cancelling the t = u pole between the transformed
/// equations, asserts its closed form -1/(t(t-1)(t-x)), and certifies the
/// combination coefficientwise.  F is extracted from the Psi-coefficient and
/// checked to be free of t.
EliminationStep eliminate_apparent_pole(const LinOp& L1p, const LinOp& L2p,
                                        const Theta& theta);

/// The display formula for F, cross-asserted against the pipeline extraction.
RatFunc compute_F(const Theta& theta);

struct EliminationCertificate {
    RatFunc lambda13;
    RatFunc F;
    RatFunc gauge_choice;  // value substituted for gp
    std::vector<std::pair<std::string, RatFunc>> witnesses;  // all exactly zero

    bool all_zero() const {
        for (const auto& w : witnesses)
            if (!w.second.is_zero()) return false;
        return true;
    }
};

enum class GaugeChoice { zero, symbolic };

/// Runs the full three-step construction and certifies the final operator
/// against the heat template: c_x = -x(x-1), c_tt = t(t-1)(t-x),
/// c_t = -t(t-1)(t-x)((th0-1)/t + (th1-1)/(t-1) + thx/(t-x)),
/// c_0 = (K/4)(t-x) - g.  No coefficient may involve u or u1.
std::pair<LinOp, EliminationCertificate> heat_operator(const Theta& theta,
                                                       GaugeChoice g_choice);

/// The heat template itself (independent transcription used by the numerics).
LinOp heat_template(const Theta& theta, GaugeChoice g_choice);

/// theta = 0, g = 0, d/dx dropped, divided by (t-x):
/// t(t-1) d^2/dt^2 + (2t-1) d/dt + 1/4.
LinOp picard_reduction();

}  // namespace pviheat

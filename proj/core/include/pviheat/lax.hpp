#pragma once

#include <functional>

#include "pviheat/derivation.hpp"
#include "pviheat/linop.hpp"
#include "pviheat/theta.hpp"

namespace pviheat {

/// Right side of the sixth Painleve equation, as a single reduced rational
/// function of the supplied arguments (t is never involved: x is the
/// deformation variable throughout).
RatFunc pvi_rhs(const RatFunc& x_val, const RatFunc& u_val, const RatFunc& u1_val,
                const PviParams& params);

/// The total x-derivative along the flow: x -> 1, u -> u1, u1 -> pvi_rhs.
/// gp, g, c and p are inert; differentiating through them is an error.
Derivation x_flow(const Theta& theta);

/// Scalar data of the linear pair in concise second-order form.
struct LaxForms {
    RatFunc S, W, g0, g1;
    std::function<RatFunc(const RatFunc&)> fG;
};

struct LaxPair {
    LinOp L1;  // d^2/dt^2 + (S/2)
    LinOp L2;  // d/dx + W d/dt - (1/2)(dW/dt)
    LaxForms forms;
};

LaxPair build_lax(const Theta& theta);

/// Scalar multiplier of psi left after formally commuting the two equations,
/// rewriting psi_tt and psi_x until only psi and psi_t remain and applying the
/// x-flow to all coefficients.  Identically zero exactly when the pair is
/// compatible.
RatFunc compat_residual(const LinOp& L1, const LinOp& L2, const Derivation& flow);

/// Defining data of the one-parameter classical Riccati solutions.
struct RiccatiForms {
    /// R(a, b, c), cleared of the internal denominators u, u-1, u-x
    /// (a polynomial in u and u1).
    std::function<RatFunc(const RatFunc&, const RatFunc&, const RatFunc&)> R_of;
    RatFunc K;  // (1 - th_0 - th_1 - th_x)^2 - th_inf^2
};

RiccatiForms riccati_forms(const Theta& theta);

/// Residues of the transformed first equation at its four finite poles.
struct Residues {
    RatFunc r0, r1, rx, ru;
};

Residues residues(const Theta& theta);

/// Obstruction to -Rx/(4u(u-1)(u-x)) being the polynomial Hamiltonian in the
/// canonical variables (u, p, x); identically zero.
RatFunc hamiltonian_check(const Theta& theta);

}  // namespace pviheat

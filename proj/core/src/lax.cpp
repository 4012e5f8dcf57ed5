#include "pviheat/lax.hpp"

namespace pviheat {

RatFunc pvi_rhs(const RatFunc& x, const RatFunc& u, const RatFunc& u1,
                const PviParams& prm) {
    const RatFunc one(1L);
    // Named singular factors: numeric evaluation points must avoid their zeros.
    const struct {
        const char* name;
        RatFunc value;
    } locus[] = {
        {"u", u}, {"u-1", u - one}, {"u-x", u - x}, {"x", x}, {"x-1", x - one},
    };
    for (const auto& s : locus) {
        if (s.value.is_zero())
            throw KernelError(std::string("evaluation point on the singular locus: ") +
                              s.name + " = 0");
    }
    const RatFunc half(rat(1, 2));
    RatFunc first = half * (one / u + one / (u - one) + one / (u - x)) * u1 * u1;
    RatFunc second = (one / x + one / (x - one) + one / (u - x)) * u1;
    RatFunc bracket = prm.alpha + prm.beta * x / (u * u) +
                      prm.gamma * (x - one) / ((u - one) * (u - one)) +
                      prm.delta * x * (x - one) / ((u - x) * (u - x));
    RatFunc prefactor = u * (u - one) * (u - x) / (x * x * (x - one) * (x - one));
    return first - second + prefactor * bracket;
}

Derivation x_flow(const Theta& theta) {
    const PviParams prm = theta_correspondence(theta).first;
    Derivation d;
    d.set_image(Var::x, RatFunc(1L));
    d.set_image(Var::u, var(Var::u1));
    d.set_image(Var::u1, pvi_rhs(var(Var::x), var(Var::u), var(Var::u1), prm));
    d.set_inert(Var::gp);
    d.set_inert(Var::g);
    d.set_inert(Var::c);
    d.set_inert(Var::p);
    return d;
}

LaxPair build_lax(const Theta& theta) {
    const FuchsParams fp = theta_correspondence(theta).second;
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x), u = var(Var::u), u1 = var(Var::u1);

    LaxForms forms;
    forms.W = -t * (t - one) * (u - x) / ((t - u) * x * (x - one));
    forms.g1 = -x * (x - one) / (RatFunc(2L) * (u - x));
    forms.g0 = -u + RatFunc(rat(1, 2));
    forms.fG = [fp, x, one](const RatFunc& z) {
        return fp.A / (z * z) + fp.B / ((z - one) * (z - one)) +
               fp.C / ((z - x) * (z - x)) + fp.E / (z * (z - one));
    };

    // The middle numerator carries -u(u-1)(u-x) fG(u), the mirror image of the
    // trailing t(t-1)(t-x) fG(t) over the common denominator.  Anything else
    // breaks the log-free expansion at the apparent singularity t = u.
    const RatFunc g1u1 = forms.g1 * u1;
    RatFunc minus_S_half =
        RatFunc(rat(3, 4)) / ((t - u) * (t - u)) +
        (g1u1 + forms.g0) / ((t - u) * t * (t - one)) +
        ((g1u1 * g1u1 - forms.g0 * forms.g0) * (u - x) / (u * (u - one)) -
         u * (u - one) * (u - x) * forms.fG(u)) /
            (t * (t - one) * (t - x)) +
        forms.fG(t);
    forms.S = -RatFunc(2L) * minus_S_half;

    LinOp L1{one, RatFunc(), RatFunc(), RatFunc(rat(1, 2)) * forms.S};
    const Derivation dt = Derivation::coordinate(Var::t);
    LinOp L2{RatFunc(), forms.W, one, -RatFunc(rat(1, 2)) * dt(forms.W)};
    return {L1, L2, forms};
}

namespace {

/// a*psi + b*psi_t: the reduction basis for the formal commutator.
struct WaveExpr {
    RatFunc a, b;
};

}  // namespace

RatFunc compat_residual(const LinOp& L1, const LinOp& L2, const Derivation& flow) {
    if (!(L1.c_tt == RatFunc(1L)) || !L1.c_t.is_zero() || !L1.c_x.is_zero())
        throw KernelError("compat_residual expects L1 = d^2/dt^2 + (S/2)");
    if (!(L2.c_x == RatFunc(1L)) || !L2.c_tt.is_zero())
        throw KernelError("compat_residual expects L2 = d/dx + W d/dt - (1/2) W_t");

    const RatFunc S_half = L1.c_0;  // psi_tt -> -S_half * psi
    const Derivation dt = Derivation::coordinate(Var::t);
    // psi_x -> alpha*psi + beta*psi_t from the second equation.
    const RatFunc alpha = -L2.c_0;
    const RatFunc beta = -L2.c_t;

    auto apply_dt = [&](const WaveExpr& e) {
        return WaveExpr{dt(e.a) - e.b * S_half, e.a + dt(e.b)};
    };
    auto apply_dx = [&](const WaveExpr& e) {
        // psi_tx = d/dt (alpha*psi + beta*psi_t) with psi_tt rewritten.
        const RatFunc tx_a = dt(alpha) - beta * S_half;
        const RatFunc tx_b = alpha + dt(beta);
        return WaveExpr{flow(e.a) + e.a * alpha + e.b * tx_a,
                        flow(e.b) + e.a * beta + e.b * tx_b};
    };

    const WaveExpr psi{RatFunc(1L), RatFunc()};
    const WaveExpr psi_tt = apply_dt(apply_dt(psi));
    const WaveExpr lhs = apply_dx(psi_tt);                    // d/dx then reduce
    const WaveExpr rhs = apply_dt(apply_dt(apply_dx(psi)));   // reduce then d^2/dt^2
    const WaveExpr diff{lhs.a - rhs.a, lhs.b - rhs.b};
    if (!diff.b.is_zero())
        throw KernelError("internal: commutator retained a psi_t component");
    return diff.a;
}

RiccatiForms riccati_forms(const Theta& theta) {
    const RatFunc one(1L);
    const RatFunc x = var(Var::x), u = var(Var::u), u1 = var(Var::u1);
    RiccatiForms out;
    out.R_of = [x, u, u1, one](const RatFunc& a, const RatFunc& b, const RatFunc& cc) {
        return x * (x - one) * u1 + a * (u - one) * (u - x) + b * u * (u - x) +
               (cc - one) * u * (u - one);
    };
    const RatFunc s = one - theta.zero - theta.one - theta.x;
    out.K = s * s - theta.inf * theta.inf;
    return out;
}

Residues residues(const Theta& th) {
    const RatFunc one(1L), two(2L);
    const RatFunc x = var(Var::x), u = var(Var::u);
    RiccatiForms rf = riccati_forms(th);
    const RatFunc R = rf.R_of(th.zero, th.one, th.x);
    const RatFunc prod = rf.K * u * (u - one) * (u - x);
    Residues out;
    out.ru = R;
    out.r0 = -(R * rf.R_of(two - th.zero, -th.one, -th.x) + prod * u) / x;
    out.r1 = -(R * rf.R_of(-th.zero, two - th.one, -th.x) + prod * (u - one)) / (one - x);
    out.rx = -(R * rf.R_of(-th.zero, -th.one, two - th.x) + prod * (u - x)) / (x * (x - one));
    return out;
}

RatFunc hamiltonian_check(const Theta& th) {
    const RatFunc one(1L);
    const RatFunc x = var(Var::x), u = var(Var::u), pp = var(Var::p);
    RiccatiForms rf = riccati_forms(th);
    Residues res = residues(th);
    const RatFunc uuu = u * (u - one) * (u - x);
    const RatFunc H = -res.rx / (RatFunc(4L) * uuu);

    // R = x(x-1) u1 + Theta(u) is linear in u1, so p = R/(2u(u-1)(u-x)) inverts to
    // u1 = (2u(u-1)(u-x) p - Theta(u)) / (x(x-1)).
    const RatFunc theta_of_u = th.zero * (u - one) * (u - x) + th.one * u * (u - x) +
                               (th.x - one) * u * (u - one);
    const RatFunc u1_of_p = (RatFunc(2L) * uuu * pp - theta_of_u) / (x * (x - one));
    const RatFunc H_up = subst(H, Var::u1, u1_of_p);

    const RatFunc target = uuu * pp * pp - theta_of_u * pp +
                           (rf.K / RatFunc(4L)) * (u - x);
    return H_up * x * (x - one) - target;
}

}  // namespace pviheat

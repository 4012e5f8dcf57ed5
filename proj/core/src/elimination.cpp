#include "pviheat/elimination.hpp"

#include <array>

#include "pviheat/partial_fractions.hpp"

namespace pviheat {
namespace {

RatFunc residue_at_u(const RatFunc& f) {
    const std::array<RatFunc, 4> poles = {RatFunc(), RatFunc(1L), var(Var::x),
                                          var(Var::u)};
    return partial_fractions_t(f, poles).residue_at(var(Var::u));
}

void require_zero(const RatFunc& w, const char* what) {
    if (!w.is_zero())
        throw CertificationError(std::string(what) + " failed to vanish");
}

}  // namespace

EliminationStep eliminate_apparent_pole(const LinOp& L1p, const LinOp& L2p,
                                        const Theta& theta) {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x), u = var(Var::u);

    // The multiplier is pinned at t = u by the residue quotient of either
    // coefficient pair; both quotients must agree or no cancellation exists.
    const RatFunc res1_t = residue_at_u(L1p.c_t);
    const RatFunc res2_t = residue_at_u(L2p.c_t);
    const RatFunc res1_0 = residue_at_u(L1p.c_0);
    const RatFunc res2_0 = residue_at_u(L2p.c_0);
    if (res2_t.is_zero())
        throw CertificationError(
            "apparent-pole elimination: the x-equation has no pole at t = u to "
            "cancel against");
    const RatFunc lam_at_u = -res1_t / res2_t;
    if (!(lam_at_u * res2_0 + res1_0).is_zero())
        throw CertificationError(
            "apparent-pole elimination: the residue quotients at t = u disagree "
            "between the dPsi/dt and Psi coefficients");

    // lam_at_u is a rational function of u, x alone; its extension off t = u is
    // the same function of t.
    if (lam_at_u.depends_on(Var::t) || lam_at_u.depends_on(Var::u1))
        throw CertificationError(
            "apparent-pole elimination: residue quotient is not a function of u and x");
    EliminationStep out;
    out.lambda13 = subst(lam_at_u, Var::u, t);
    const RatFunc closed = -one / (t * (t - one) * (t - x));
    require_zero(out.lambda13 - closed,
                 "apparent-pole elimination: closed form of the multiplier");

    out.L15 = L1p + out.lambda13 * L2p;
    const char* names[] = {"d2Psi/dt2", "dPsi/dt", "dPsi/dx", "Psi"};
    const RatFunc* coeffs[] = {&out.L15.c_tt, &out.L15.c_t, &out.L15.c_x, &out.L15.c_0};
    for (int i = 0; i < 4; ++i)
        if (!residue_at_u(*coeffs[i]).is_zero())
            throw CertificationError(std::string("apparent-pole elimination: the pole "
                                                 "at t = u survives in the ") +
                                     names[i] + " coefficient");

    // Combined-equation template.
    require_zero(out.L15.c_tt - one, "combined equation: d2Psi/dt2 coefficient");
    require_zero(out.L15.c_x - (-x * (x - one) / (t * (t - one) * (t - x))),
                 "combined equation: dPsi/dx coefficient");
    const RatFunc ct_want = -((theta.zero - one) / t + (theta.one - one) / (t - one) +
                              theta.x / (t - x));
    require_zero(out.L15.c_t - ct_want, "combined equation: dPsi/dt coefficient");

    const RiccatiForms rf = riccati_forms(theta);
    const RatFunc quarter(rat(1, 4));
    out.F = quarter * rf.K * (t - x) - x * (x - one) * var(Var::gp) -
            out.L15.c_0 * t * (t - one) * (t - x);
    if (out.F.depends_on(Var::t))
        throw CertificationError(
            "apparent-pole elimination: the extracted remainder still depends on t");
    return out;
}

RatFunc compute_F(const Theta& theta) {
    const RatFunc one(1L), quarter(rat(1, 4));
    const RatFunc x = var(Var::x), u = var(Var::u);
    const RiccatiForms rf = riccati_forms(theta);
    const RatFunc sum = theta.zero + theta.one + theta.x;
    // Sign fixed by the constant term of the transformed x-equation: on the
    // locus R = 0, K = 0 the extraction leaves (th0+th1+thx-1)(u-x)/2, and the
    // second Hamilton equation pins the residue signs independently.
    const RatFunc display =
        rf.R_of(theta.zero, theta.one, theta.x) *
            rf.R_of(-theta.zero, -theta.one, -theta.x) /
            (RatFunc(4L) * u * (u - one) * (u - x)) -
        (theta.inf * theta.inf + one - sum * sum) * (u - x) * quarter;

    const LaxPair lax = build_lax(theta);
    const GaugeLog gauge = gauge_log_derivatives(theta);
    const TransformedPair pair = transform_lax(lax.L1, lax.L2, gauge, theta);
    const EliminationStep step = eliminate_apparent_pole(pair.L1p, pair.L2p, theta);
    require_zero(step.F - display, "remainder display formula");
    return display;
}

LinOp heat_template(const Theta& theta, GaugeChoice g_choice) {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x);
    const RatFunc poly = t * (t - one) * (t - x);
    LinOp op;
    op.c_x = -x * (x - one);
    op.c_tt = poly;
    op.c_t = -poly * ((theta.zero - one) / t + (theta.one - one) / (t - one) +
                      theta.x / (t - x));
    const RatFunc g = g_choice == GaugeChoice::zero ? RatFunc() : var(Var::g);
    op.c_0 = RatFunc(rat(1, 4)) * riccati_forms(theta).K * (t - x) - g;
    return op;
}

std::pair<LinOp, EliminationCertificate> heat_operator(const Theta& theta,
                                                       GaugeChoice g_choice) {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x);

    const LaxPair lax = build_lax(theta);
    const GaugeLog gauge = gauge_log_derivatives(theta);
    const TransformedPair pair = transform_lax(lax.L1, lax.L2, gauge, theta);
    const EliminationStep step = eliminate_apparent_pole(pair.L1p, pair.L2p, theta);

    EliminationCertificate cert;
    cert.lambda13 = step.lambda13;
    cert.F = step.F;
    cert.witnesses.emplace_back("remainder display formula", step.F - compute_F(theta));

    const RatFunc g = g_choice == GaugeChoice::zero ? RatFunc() : var(Var::g);
    cert.gauge_choice = (g - step.F) / (x * (x - one));

    const RatFunc poly = t * (t - one) * (t - x);
    LinOp heat;
    heat.c_tt = poly * subst(step.L15.c_tt, Var::gp, cert.gauge_choice);
    heat.c_t = poly * subst(step.L15.c_t, Var::gp, cert.gauge_choice);
    heat.c_x = poly * subst(step.L15.c_x, Var::gp, cert.gauge_choice);
    heat.c_0 = poly * subst(step.L15.c_0, Var::gp, cert.gauge_choice);

    const LinOp want = heat_template(theta, g_choice);
    cert.witnesses.emplace_back("heat equation: d2Psi/dt2 coefficient",
                                heat.c_tt - want.c_tt);
    cert.witnesses.emplace_back("heat equation: dPsi/dt coefficient",
                                heat.c_t - want.c_t);
    cert.witnesses.emplace_back("heat equation: dPsi/dx coefficient",
                                heat.c_x - want.c_x);
    cert.witnesses.emplace_back("heat equation: Psi coefficient", heat.c_0 - want.c_0);
    for (const auto& [name, w] : cert.witnesses)
        require_zero(w, name.c_str());

    const RatFunc* coeffs[] = {&heat.c_tt, &heat.c_t, &heat.c_x, &heat.c_0};
    for (const RatFunc* cf : coeffs)
        if (cf->depends_on(Var::u) || cf->depends_on(Var::u1))
            throw CertificationError(
                "heat equation: a coefficient still depends on the nonlinear "
                "trajectory");
    return {heat, cert};
}

LinOp picard_reduction() {
    const Theta th0 = Theta::rational(0, 0, 0, 0);
    const LinOp heat = heat_operator(th0, GaugeChoice::zero).first;
    const RatFunc t = var(Var::t), x = var(Var::x);
    const RatFunc tmx = t - x;
    LinOp op;
    op.c_tt = heat.c_tt / tmx;
    op.c_t = heat.c_t / tmx;
    op.c_x = RatFunc();
    op.c_0 = heat.c_0 / tmx;
    // The result is independent of the deformation variable.
    for (const RatFunc* cf : {&op.c_tt, &op.c_t, &op.c_0})
        if (cf->depends_on(Var::x))
            throw CertificationError("reduced operator retained the deformation variable");
    return op;
}

}  // namespace pviheat

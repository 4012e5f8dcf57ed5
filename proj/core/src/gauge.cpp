#include "pviheat/gauge.hpp"

#include <array>

#include "pviheat/partial_fractions.hpp"

namespace pviheat {
namespace {

/// Coefficientwise certification with pole localization of the first mismatch.
void certify_coefficient(const RatFunc& got, const RatFunc& want, const char* equation,
                         const char* coefficient) {
    const RatFunc diff = got - want;
    if (diff.is_zero()) return;
    std::string where = "unlocalized";
    try {
        const std::array<RatFunc, 4> poles = {RatFunc(), RatFunc(1L), var(Var::x),
                                              var(Var::u)};
        const char* names[] = {"t=0", "t=1", "t=x", "t=u"};
        PartialFractions pf = partial_fractions_t(diff, poles);
        for (const auto& part : pf.parts) {
            for (std::size_t j = 0; j < poles.size(); ++j)
                if ((part.pole - poles[j]).is_zero() && !part.coeffs.empty()) {
                    where = names[j];
                    break;
                }
            if (where != "unlocalized") break;
        }
        if (where == "unlocalized" && !pf.polynomial_part.is_zero())
            where = "polynomial part";
    } catch (const KernelError&) {
        // Mismatch with an unexpected pole structure; report it unlocalized.
    }
    throw CertificationError(std::string(equation) + ": coefficient of " + coefficient +
                             " deviates from its template at " + where);
}

}  // namespace

GaugeLog gauge_log_derivatives(const Theta& theta) {
    const RatFunc one(1L), two(2L);
    const RatFunc t = var(Var::t), x = var(Var::x), u = var(Var::u), u1 = var(Var::u1);
    GaugeLog g;
    g.lam_t = (one - theta.zero) / (two * t) + (one - theta.one) / (two * (t - one)) +
              (one - theta.x) / (two * (t - x)) - one / (two * (t - u));
    // The x-derivative is the total one along the flow: the (t-u)^(-1/2) factor
    // contributes u1/(2(t-u)), the (t-x) factor its explicit part, and the
    // arbitrary gauge G(x) its inert derivative gp.
    g.lam_x = -(one - theta.x) / (two * (t - x)) + u1 / (two * (t - u)) + var(Var::gp);
    return g;
}

LinOp transformed_t_template(const Theta& theta) {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x), u = var(Var::u);
    const Residues rs = residues(theta);
    LinOp op;
    op.c_tt = one;
    op.c_x = RatFunc();
    op.c_t = (one - theta.zero) / t + (one - theta.one) / (t - one) +
             (one - theta.x) / (t - x) - one / (t - u);
    op.c_0 = (rs.r0 / t + rs.r1 / (t - one) + rs.rx / (t - x) +
              RatFunc(2L) * rs.ru / (t - u)) /
             (RatFunc(4L) * u * (u - one) * (u - x));
    return op;
}

LinOp transformed_x_template(const Theta& theta) {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x), u = var(Var::u);
    const Residues rs = residues(theta);
    LinOp op;
    op.c_tt = RatFunc();
    op.c_x = x * (x - one);
    op.c_t = -t * (t - one) * (u - x) / (t - u);
    op.c_0 = x * (x - one) * var(Var::gp) + rs.ru / (RatFunc(2L) * (t - u)) +
             (theta.zero + theta.one + theta.x - one) * (u - x) / RatFunc(2L);
    return op;
}

TransformedPair transform_lax(const LinOp& L1, const LinOp& L2, const GaugeLog& gauge,
                              const Theta& theta) {
    const RatFunc one(1L);
    const RatFunc x = var(Var::x);
    const Derivation dt = Derivation::coordinate(Var::t);

    TransformedPair out;
    out.L1p.c_tt = one;
    out.L1p.c_t = RatFunc(2L) * gauge.lam_t;
    out.L1p.c_x = RatFunc();
    out.L1p.c_0 = gauge.lam_t * gauge.lam_t + dt(gauge.lam_t) + L1.c_0;

    const RatFunc scale = x * (x - one);
    out.L2p.c_tt = RatFunc();
    out.L2p.c_x = scale * L2.c_x;
    out.L2p.c_t = scale * L2.c_t;
    out.L2p.c_0 = scale * (gauge.lam_x + L2.c_t * gauge.lam_t + L2.c_0);

    const LinOp want1 = transformed_t_template(theta);
    certify_coefficient(out.L1p.c_t, want1.c_t, "transformed t-equation", "dPsi/dt");
    certify_coefficient(out.L1p.c_0, want1.c_0, "transformed t-equation", "Psi");

    const LinOp want2 = transformed_x_template(theta);
    certify_coefficient(out.L2p.c_x, want2.c_x, "transformed x-equation", "dPsi/dx");
    certify_coefficient(out.L2p.c_t, want2.c_t, "transformed x-equation", "dPsi/dt");
    certify_coefficient(out.L2p.c_0, want2.c_0, "transformed x-equation", "Psi");
    return out;
}

}  // namespace pviheat

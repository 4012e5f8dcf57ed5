#include <doctest.h>

#include "pviheat/checks.hpp"
#include "pviheat/lax.hpp"
#include "pviheat/local_analysis.hpp"

namespace {

using namespace pviheat;

Theta sample_theta() {
    return Theta::rational(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7));
}

}  // namespace

TEST_CASE("nonlinear flow: right side at a reference point") {
    // Hand evaluation with exponents (1,0,0,0) at x = 3, u = 2, u' = 0:
    // the bracket is 1/2 + 3 = 7/2 and the prefactor -2/36.
    const auto [params, fuchs] =
        theta_correspondence(Theta::rational(1, 0, 0, 0));
    const RatFunc value = pvi_rhs(RatFunc(3L), RatFunc(2L), RatFunc(), params);
    CHECK(value == RatFunc(rat(-7, 36)));

    // The Picard point with vanishing slope: the right side vanishes entirely.
    const auto [pic, pic_f] = theta_correspondence(Theta::rational(0, 0, 0, 1));
    const RatFunc flat =
        pvi_rhs(var(Var::x), var(Var::u), RatFunc(), pic);
    CHECK(flat.is_zero());
}

TEST_CASE("nonlinear flow: derivation images") {
    const Derivation flow = x_flow(sample_theta());
    CHECK(flow(var(Var::x)) == RatFunc(1L));
    CHECK(flow(var(Var::u)) == var(Var::u1));
    CHECK_THROWS_AS((void)flow(var(Var::gp)), InertSymbolError);
}

TEST_CASE("linear pair: compatibility holds, and fails under perturbation") {
    const Theta th = sample_theta();
    const LaxPair lax = build_lax(th);
    CHECK(compat_residual(lax.L1, lax.L2, x_flow(th)).is_zero());

    // Perturbed flow (u'' shifted by 1): the residual detects that the
    // trajectory no longer solves the nonlinear equation.
    const auto [params, fuchs] = theta_correspondence(th);
    Derivation bad;
    bad.set_image(Var::x, RatFunc(1L));
    bad.set_image(Var::u, var(Var::u1));
    bad.set_image(Var::u1, pvi_rhs(var(Var::x), var(Var::u), var(Var::u1), params) +
                               RatFunc(1L));
    CHECK_FALSE(compat_residual(lax.L1, lax.L2, bad).is_zero());
}

TEST_CASE("one-parameter family: constant and boundary values") {
    const RatFunc one(1L);
    const RatFunc x = var(Var::x);

    const RiccatiForms zero_forms = riccati_forms(Theta::rational(0, 0, 0, 0));
    CHECK(zero_forms.K == one);

    const Theta sym = Theta::symbolic();
    const RiccatiForms forms = riccati_forms(sym);
    const RatFunc sum = sym.zero + sym.one + sym.x;
    CHECK(forms.K == (one - sum) * (one - sum) - sym.inf * sym.inf);

    const RatFunc R = forms.R_of(sym.zero, sym.one, sym.x);
    CHECK(R.den().is_constant());
    CHECK(R.num().degree(Var::u) == 2);
    CHECK(R.num().degree(Var::u1) == 1);
    // At u = x with u' = 0 only the last summand survives.
    const RatFunc at_x = subst(subst(R, Var::u1, RatFunc()), Var::u, x);
    CHECK(at_x == x * (x - one) * (sym.x - one));
}

TEST_CASE("residues and Hamiltonian structure certify at a rational point") {
    CHECK(run_check("residues", sample_theta()).status == "pass");
    CHECK(hamiltonian_check(sample_theta()).is_zero());
    CHECK(run_check("hamiltonian", sample_theta()).status == "pass");
}

TEST_CASE("local exponents: full singularity table and log-free expansion") {
    const CheckReport rep = run_check("apparent", sample_theta());
    CHECK(rep.status == "pass");

    // The gap-2 obstruction is genuinely sensitive: an extra simple pole at
    // the moving singularity leaves the exponents alone but creates a log.
    const Theta th = sample_theta();
    LaxPair lax = build_lax(th);
    const RatFunc half(rat(1, 2));
    CHECK(frobenius_obstruction(lax.L1, var(Var::u), -half, 2).is_zero());
    LinOp perturbed = lax.L1;
    perturbed.c_0 += RatFunc(1L) / (var(Var::t) - var(Var::u));
    CHECK_FALSE(frobenius_obstruction(perturbed, var(Var::u), -half, 2).is_zero());
}

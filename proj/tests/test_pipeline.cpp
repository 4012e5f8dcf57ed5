#include <doctest.h>

#include <random>

#include "pviheat/checks.hpp"
#include "pviheat/elimination.hpp"
#include "pviheat/local_analysis.hpp"

namespace {

using namespace pviheat;

Theta sample_theta() {
    return Theta::rational(rat(1, 2), rat(1, 3), rat(1, 5), rat(1, 7));
}

RatFunc subst_theta(const RatFunc& f, const Theta& th) {
    RatFunc out = subst(f, Var::th_inf, th.inf);
    out = subst(out, Var::th_0, th.zero);
    out = subst(out, Var::th_1, th.one);
    return subst(out, Var::th_x, th.x);
}

}  // namespace

TEST_CASE("prefactor derivatives: residues at the moving singularity") {
    const GaugeLog gauge = gauge_log_derivatives(Theta::symbolic());
    const RatFunc t = var(Var::t), u = var(Var::u), u1 = var(Var::u1);
    CHECK(subst((t - u) * gauge.lam_t, Var::t, u) == RatFunc(rat(-1, 2)));
    CHECK(subst((t - u) * gauge.lam_x, Var::t, u) == u1 / RatFunc(2L));
}

TEST_CASE("conjugated pair matches its display templates") {
    const Theta th = sample_theta();
    const LaxPair lax = build_lax(th);
    const TransformedPair pair =
        transform_lax(lax.L1, lax.L2, gauge_log_derivatives(th), th);
    CHECK(pair.L1p == transformed_t_template(th));
    CHECK(pair.L2p == transformed_x_template(th));
    CHECK(run_check("gauge", th).status == "pass");
}

TEST_CASE("pole removal: multiplier closed form and t-free remainder") {
    const Theta th = sample_theta();
    const LaxPair lax = build_lax(th);
    const TransformedPair pair =
        transform_lax(lax.L1, lax.L2, gauge_log_derivatives(th), th);
    const EliminationStep step = eliminate_apparent_pole(pair.L1p, pair.L2p, th);

    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x);
    CHECK(step.lambda13 == -one / (t * (t - one) * (t - x)));
    CHECK_FALSE(step.F.depends_on(Var::t));
    CHECK(step.F == compute_F(th));
    CHECK(run_check("eliminate", th).status == "pass");
}

TEST_CASE("remainder term: reference value and locus behavior") {
    const RatFunc F0 = compute_F(Theta::rational(0, 0, 0, 0));
    CHECK(F0.eval({{Var::u, rat(2)}, {Var::x, rat(3)}, {Var::u1, rat(0)}}) ==
          rat(-1, 4));
    CHECK(run_check("F", Theta::symbolic()).status == "pass");
}

TEST_CASE("final operator: template, free gauge term, and zero-gauge choice") {
    const Theta th = sample_theta();
    const auto [heat, cert] = heat_operator(th, GaugeChoice::symbolic);
    CHECK(cert.all_zero());
    CHECK(heat == heat_template(th, GaugeChoice::symbolic));

    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x);
    const RatFunc K = riccati_forms(th).K;
    CHECK(heat.c_tt == t * (t - one) * (t - x));
    CHECK(heat.c_x == -x * (x - one));
    CHECK(heat.c_0 == K / RatFunc(4L) * (t - x) - var(Var::g));
    for (const RatFunc* c : {&heat.c_tt, &heat.c_t, &heat.c_x, &heat.c_0}) {
        CHECK_FALSE(c->depends_on(Var::u));
        CHECK_FALSE(c->depends_on(Var::u1));
    }

    const auto [flat, flat_cert] = heat_operator(Theta::rational(0, 0, 0, 0),
                                                 GaugeChoice::zero);
    CHECK(flat_cert.all_zero());
    CHECK(flat.c_0 == (t - x) / RatFunc(4L));
}

TEST_CASE("specialization commutes with the pipeline") {
    const auto [sym_heat, sym_cert] =
        heat_operator(Theta::symbolic(), GaugeChoice::symbolic);
    REQUIRE(sym_cert.all_zero());

    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> num(1, 5);
    std::uniform_int_distribution<int> den(1, 7);
    std::uniform_int_distribution<int> sign(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        auto draw = [&] {
            const Rational q = rat(num(rng), den(rng));
            return sign(rng) ? q : Rational(-q);
        };
        const Theta th = Theta::rational(draw(), draw(), draw(), draw());
        const auto [heat, cert] = heat_operator(th, GaugeChoice::symbolic);
        REQUIRE(cert.all_zero());
        CHECK(subst_theta(sym_heat.c_tt, th) == heat.c_tt);
        CHECK(subst_theta(sym_heat.c_t, th) == heat.c_t);
        CHECK(subst_theta(sym_heat.c_x, th) == heat.c_x);
        CHECK(subst_theta(sym_heat.c_0, th) == heat.c_0);
    }
}

TEST_CASE("elliptic-period reduction of the final operator") {
    const LinOp pic = picard_reduction();
    const RatFunc one(1L);
    const RatFunc t = var(Var::t);
    CHECK(pic.c_tt == t * (t - one));
    CHECK(pic.c_t == RatFunc(2L) * t - one);
    CHECK(pic.c_x.is_zero());
    CHECK(pic.c_0 == RatFunc(rat(1, 4)));

    // Both exponents vanish at t = 0: the classical double-zero of the
    // period operator, hence the logarithmic second solution there.
    const LinOp monic{one, pic.c_t / pic.c_tt, RatFunc(), pic.c_0 / pic.c_tt};
    const auto [lo, hi] = indicial_exponents(monic, RatFunc());
    CHECK(lo.is_zero());
    CHECK(hi.is_zero());
    CHECK(run_check("picard", sample_theta()).status == "pass");
}

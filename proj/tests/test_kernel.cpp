#include <doctest.h>

#include <random>
#include <vector>

#include "pviheat/derivation.hpp"
#include "pviheat/gcd.hpp"
#include "pviheat/local_analysis.hpp"
#include "pviheat/parse.hpp"
#include "pviheat/partial_fractions.hpp"
#include "pviheat/theta.hpp"

namespace {

using namespace pviheat;

MultiPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> nterms(1, 6);
    MultiPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponents e{};
        e[static_cast<int>(Var::t)] = static_cast<std::uint16_t>(expo(rng));
        e[static_cast<int>(Var::x)] = static_cast<std::uint16_t>(expo(rng));
        e[static_cast<int>(Var::u)] = static_cast<std::uint16_t>(expo(rng));
        const int c = coeff(rng);
        if (c != 0) p.add_term(e, rat(c));
    }
    return p;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 7);
    return rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rationals: canonical form and string round trips") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-3, -6) == rat(1, 2));
    CHECK(rational_from_string("3/4") == rat(3, 4));
    CHECK(rational_from_string("-7") == rat(-7));
    CHECK(rational_to_string(rat(5, 10)) == "1/2");
    CHECK(rational_from_string(rational_to_string(rat(-22, 7))) == rat(-22, 7));
    CHECK_THROWS_AS((void)rational_from_string("y"), ParseError);
}

TEST_CASE("polynomials: ring axioms on random elements") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly());
        CHECK(a * MultiPoly(1) == a);
        CHECK(a * MultiPoly() == MultiPoly());
    }
}

TEST_CASE("polynomials: powers, derivatives and the Leibniz rule") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.pow(3) == a * a * a);
        for (Var v : {Var::t, Var::x, Var::u}) {
            const MultiPoly lhs = (a * b).derivative(v);
            const MultiPoly rhs = a.derivative(v) * b + a * b.derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("polynomials: coefficient extraction round trip") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly a = random_poly(rng);
        const auto coeffs = a.coefficients_in(Var::t);
        CHECK(MultiPoly::from_coefficients_in(Var::t, coeffs) == a);
        for (const MultiPoly& ck : coeffs) CHECK_FALSE(ck.depends_on(Var::t));
    }
}

TEST_CASE("polynomials: exact division and square roots") {
    std::mt19937_64 rng(99);
    const MultiPoly a = random_poly(rng);
    MultiPoly b = random_poly(rng);
    b += MultiPoly(1);  // keep b nonzero
    const auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    CHECK_FALSE(divide_exact(a * b + MultiPoly(1), b * b + MultiPoly(2)).has_value());

    MultiPoly base(1);
    base += MultiPoly::variable(Var::t);
    base += MultiPoly::variable(Var::x);
    const auto r = poly_sqrt(base * base);
    REQUIRE(r.has_value());
    CHECK(*r * *r == base * base);
    CHECK_FALSE(poly_sqrt(base * base + MultiPoly(1)).has_value());
}

TEST_CASE("gcd: shared factors are detected, coprime pairs are cheap") {
    MultiPoly base(1);
    base += MultiPoly::variable(Var::t);
    base += MultiPoly::variable(Var::x);
    const MultiPoly a = base * MultiPoly::variable(Var::t);
    const MultiPoly b = base * MultiPoly::variable(Var::x);
    const auto g = try_poly_gcd(a, b, 100'000'000);
    REQUIRE(g.has_value());
    // t and x are coprime, so the gcd is base up to a rational scalar.
    CHECK(divide_exact(*g, base).has_value());
    CHECK(divide_exact(base, *g).has_value());
    CHECK(probably_coprime(MultiPoly::variable(Var::t), MultiPoly::variable(Var::x)));
    CHECK_FALSE(probably_coprime(a, b));
}

TEST_CASE("rational functions: normalization gives canonical equality") {
    std::mt19937_64 rng(5150);
    const MultiPoly a = random_poly(rng);
    MultiPoly b = random_poly(rng);
    b += MultiPoly(1);
    MultiPoly c = random_poly(rng);
    c += MultiPoly::variable(Var::u);
    c += MultiPoly(2);
    CHECK(RatFunc(a, b) == RatFunc(a * c, b * c));
    CHECK((RatFunc(a, b) - RatFunc(a, b)).is_zero());
    CHECK_THROWS_AS(RatFunc(a, MultiPoly()), KernelError);

    // Field identities.
    const RatFunc f(a, b), g(c, b);
    CHECK(f + g == g + f);
    CHECK(f * g / g == f);
    CHECK(f - f == RatFunc());
}

TEST_CASE("rational functions: exact and floating evaluation") {
    const RatFunc t = var(Var::t), x = var(Var::x);
    const RatFunc f = (t * t - RatFunc(1L)) / (t - x);
    CHECK(f.eval({{Var::t, rat(3)}, {Var::x, rat(1)}}) == rat(4));
    CHECK_THROWS_AS((void)f.eval({{Var::t, rat(2)}, {Var::x, rat(2)}}), KernelError);

    std::array<double, kNumVars> p{};
    p[static_cast<int>(Var::t)] = 3.0;
    p[static_cast<int>(Var::x)] = 1.0;
    CHECK(f.eval_double(p) == doctest::Approx(4.0));
}

TEST_CASE("rational functions: zero testing modes agree") {
    const RatFunc t = var(Var::t), u = var(Var::u);
    const RatFunc zero = (t + u) * (t - u) - t * t + u * u;
    const RatFunc nonzero = (t + u) * (t - u) - t * t;
    CHECK(is_zero(zero, ZeroTestMode::exact));
    CHECK(is_zero(zero, ZeroTestMode::probabilistic, 42));
    CHECK_FALSE(is_zero(nonzero, ZeroTestMode::exact));
    CHECK_FALSE(is_zero(nonzero, ZeroTestMode::probabilistic, 42));
}

TEST_CASE("derivations: Leibniz and quotient rules, inert symbols are guarded") {
    const RatFunc t = var(Var::t), x = var(Var::x);
    Derivation d = Derivation::coordinate(Var::t);
    const RatFunc f = (t * t + x) / (t - RatFunc(1L));
    const RatFunc g = t * x + RatFunc(2L);
    CHECK(d(f * g) == d(f) * g + f * d(g));
    CHECK(d(f / g) == (d(f) * g - f * d(g)) / (g * g));
    CHECK(d(x) == RatFunc());

    Derivation inert;
    inert.set_inert(Var::g);
    CHECK_THROWS_AS((void)inert.apply(var(Var::g) + t), InertSymbolError);
}

TEST_CASE("parser: print/parse round trip and literal forms") {
    const RatFunc t = var(Var::t), x = var(Var::x), u1 = var(Var::u1);
    CHECK(parse_expr("t^2 - 3/2*x + 1") ==
          t * t - RatFunc(rat(3, 2)) * x + RatFunc(1L));
    CHECK(parse_expr("th_0 * (u - 1)") == var(Var::th_0) * (var(Var::u) - RatFunc(1L)));

    const RatFunc f = (t + u1) / (x * (x - RatFunc(1L))) - t.pow(3) * RatFunc(rat(5, 7));
    CHECK(parse_expr(print_expr(f)) == f);
    CHECK_THROWS_AS((void)parse_expr("t +* x"), ParseError);
    CHECK_THROWS_AS((void)parse_expr("bogus_var + 1"), ParseError);
}

TEST_CASE("partial fractions: recomposition, residues and polynomial part") {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x), u = var(Var::u), u1 = var(Var::u1);
    const RatFunc f =
        -one / t + one / (t - one) + u1 / ((t - u) * (t - u)) + t + x;
    const std::vector<RatFunc> poles = {RatFunc(), one, x, u};
    const PartialFractions pf = partial_fractions_t(f, poles);
    CHECK(pf.recompose() == f);
    CHECK(pf.residue_at(RatFunc()) == -one);
    CHECK(pf.residue_at(one) == one);
    CHECK(pf.residue_at(x) == RatFunc());
    CHECK(pf.residue_at(u) == RatFunc());  // only an order-2 part there
    CHECK(pf.polynomial_part == t + x);

    // A pole outside the declared set is reported, not silently mangled.
    CHECK_THROWS_AS((void)partial_fractions_t(one / (t - RatFunc(5L)), poles),
                    KernelError);
}

TEST_CASE("local analysis: Taylor coefficients and indicial roots") {
    const RatFunc one(1L);
    const RatFunc t = var(Var::t);
    CHECK(taylor_coeff_t(one / (one - t), RatFunc(), 3) == one);
    CHECK(taylor_coeff_t(t * t, RatFunc(1L), 1) == RatFunc(2L));

    // rho(rho-1) - 6 rho + 10 has roots 2 and 5.
    const LinOp op{one, RatFunc(-6L) / t, RatFunc(), RatFunc(10L) / (t * t)};
    const auto [lo, hi] = indicial_exponents(op, RatFunc());
    const bool direct = lo == RatFunc(2L) && hi == RatFunc(5L);
    const bool swapped = lo == RatFunc(5L) && hi == RatFunc(2L);
    CHECK((direct || swapped));
}

TEST_CASE("parameter maps: closed forms and fifty random round trips") {
    const Theta sym = Theta::symbolic();
    const auto [pvi, fuchs] = theta_correspondence(sym);
    const RatFunc one(1L), two(2L), four(4L);
    CHECK(pvi.alpha == sym.inf * sym.inf / two);
    CHECK(pvi.beta == -sym.zero * sym.zero / two);
    CHECK(pvi.gamma == sym.one * sym.one / two);
    CHECK(pvi.delta == (one - sym.x * sym.x) / two);
    CHECK(fuchs.A == (sym.zero * sym.zero - one) / four);
    CHECK(fuchs.B == (sym.one * sym.one - one) / four);
    CHECK(fuchs.C == (sym.x * sym.x - one) / four);
    CHECK(fuchs.E ==
          sym.inf * sym.inf / four - one - fuchs.A - fuchs.B - fuchs.C);

    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const Theta th = Theta::rational(random_rational(rng), random_rational(rng),
                                         random_rational(rng), random_rational(rng));
        const auto [p, f] = theta_correspondence(th);
        const FuchsParams f2 = fuchs_from_pvi(p);
        const PviParams p2 = pvi_from_fuchs(f);
        CHECK(f2.A == f.A);
        CHECK(f2.B == f.B);
        CHECK(f2.C == f.C);
        CHECK(f2.E == f.E);
        CHECK(p2.alpha == p.alpha);
        CHECK(p2.beta == p.beta);
        CHECK(p2.gamma == p.gamma);
        CHECK(p2.delta == p.delta);
    }
}

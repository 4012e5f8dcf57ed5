#include <benchmark/benchmark.h>

#include "pviheat/lax.hpp"
#include "pviheat/multipoly.hpp"
#include "pviheat/ratfunc.hpp"

namespace {

using namespace pviheat;

MultiPoly dense_poly(int degree) {
    // (1 + t + x + u)^degree: a reasonably dense four-variable polynomial.
    MultiPoly base(1);
    base += MultiPoly::variable(Var::t);
    base += MultiPoly::variable(Var::x);
    base += MultiPoly::variable(Var::u);
    return base.pow(static_cast<unsigned>(degree));
}

void BM_poly_mul(benchmark::State& state) {
    const MultiPoly a = dense_poly(static_cast<int>(state.range(0)));
    const MultiPoly b = dense_poly(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state) {
        MultiPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_poly_mul)->Arg(4)->Arg(8)->Arg(12)->Complexity();

void BM_ratfunc_reduce(benchmark::State& state) {
    // Building the quotient forces GCD cancellation of the shared factor.
    const MultiPoly common = dense_poly(static_cast<int>(state.range(0)));
    const MultiPoly a = dense_poly(3) * common;
    const MultiPoly b =
        (MultiPoly::variable(Var::t) - MultiPoly::variable(Var::x)) * common;
    for (auto _ : state) {
        RatFunc f(a, b);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ratfunc_reduce)->Arg(3)->Arg(5)->Arg(7);

void BM_compat_rational(benchmark::State& state) {
    const Theta theta = Theta::rational(Rational(1, 2), Rational(1, 3),
                                        Rational(1, 5), Rational(1, 7));
    for (auto _ : state) {
        const LaxPair pair = build_lax(theta);
        RatFunc r = compat_residual(pair.L1, pair.L2, x_flow(theta));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_compat_rational)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

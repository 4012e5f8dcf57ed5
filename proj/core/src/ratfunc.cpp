#include "pviheat/ratfunc.hpp"

#include <cmath>
#include <random>

#include "pviheat/gcd.hpp"

namespace pviheat {
namespace {

/// Linear factors that carry every cancellation arising from the displayed
/// formulas.  Trial division by these is much cheaper than a full GCD and is
/// attempted first; the subresultant GCD handles whatever remains.
const std::vector<MultiPoly>& common_linear_factors() {
    static const std::vector<MultiPoly> factors = [] {
        const MultiPoly one(1);
        const MultiPoly t = MultiPoly::variable(Var::t);
        const MultiPoly x = MultiPoly::variable(Var::x);
        const MultiPoly u = MultiPoly::variable(Var::u);
        return std::vector<MultiPoly>{t,     x,     u,     t - one, x - one,
                                      u - one, t - x, t - u, u - x};
    }();
    return factors;
}

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw DivisionByZeroError();
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        MultiPoly mono = monomial_gcd(num_, den_);
        if (!mono.is_constant()) {
            num_ = *divide_exact(num_, mono);
            den_ = *divide_exact(den_, mono);
        }
        for (const auto& f : common_linear_factors()) {
            while (true) {
                auto qn = divide_exact(num_, f);
                if (!qn) break;
                auto qd = divide_exact(den_, f);
                if (!qd) break;
                num_ = std::move(*qn);
                den_ = std::move(*qd);
            }
        }
    }
    if (!den_.is_constant() && !num_.is_constant() && !probably_coprime(num_, den_)) {
        auto g = try_poly_gcd(num_, den_, 200'000'000);
        if (g && !g->is_constant()) {
            num_ = *divide_exact(num_, *g);
            den_ = *divide_exact(den_, *g);
        }
        // On budget exhaustion the fraction stays unreduced; zero-testing and
        // all arithmetic remain exact.
    }
    const Rational lc = den_.leading_coeff();
    if (lc != 1) {
        const Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFunc::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    MultiPoly g = poly_gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    MultiPoly bq = *divide_exact(b.den_, g);
    MultiPoly aq = *divide_exact(a.den_, g);
    return RatFunc(a.num_ * bq + b.num_ * aq, a.den_ * bq);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int n) const {
    if (n == 0) return RatFunc(1L);
    if (n < 0) return RatFunc(1L) / pow(-n);
    RatFunc r(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
    return r;
}

namespace {

Rational eval_poly(const MultiPoly& p, const std::map<Var, Rational>& point) {
    Rational acc(0);
    for (const auto& [e, c] : p.terms()) {
        Rational term = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(static_cast<Var>(i));
            if (it == point.end())
                throw KernelError(std::string("unassigned variable in evaluation: ") +
                                  var_name(static_cast<Var>(i)));
            for (int k = 0; k < e[i]; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

}  // namespace

Rational RatFunc::eval(const std::map<Var, Rational>& point) const {
    Rational d = eval_poly(den_, point);
    if (d == 0) throw KernelError("evaluation at a pole of the rational function");
    return eval_poly(num_, point) / d;
}

double RatFunc::eval_double(const std::array<double, kNumVars>& point) const {
    auto eval_p = [&](const MultiPoly& p) {
        double acc = 0;
        for (const auto& [e, c] : p.terms()) {
            double term = c.get_d();
            for (int i = 0; i < kNumVars; ++i)
                if (e[i] > 0) term *= std::pow(point[static_cast<std::size_t>(i)], e[i]);
            acc += term;
        }
        return acc;
    };
    return eval_p(num_) / eval_p(den_);
}

std::string RatFunc::to_string() const {
    if (den_ == MultiPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool is_zero(const RatFunc& f, ZeroTestMode mode, std::uint64_t seed) {
    if (mode == ZeroTestMode::exact) return f.is_zero();
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::uniform_int_distribution<long> num_dist(-997, 997);
    std::uniform_int_distribution<long> den_dist(1, 19);
    const int kPoints = 3;
    int found = 0;
    for (int attempt = 0; attempt < 100 && found < kPoints; ++attempt) {
        std::map<Var, Rational> point;
        for (int i = 0; i < kNumVars; ++i)
            point[static_cast<Var>(i)] = rat(num_dist(rng), den_dist(rng));
        try {
            if (f.eval(point) != 0) return false;
            ++found;
        } catch (const KernelError&) {
            continue;  // hit a pole, redraw
        }
    }
    if (found < kPoints)
        throw KernelError("probabilistic zero test: retry budget exhausted finding "
                          "a non-pole evaluation point");
    return true;
}

RatFunc subst_poly(const MultiPoly& f, Var v, const RatFunc& value) {
    auto coeffs = f.coefficients_in(v);
    RatFunc acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * value + RatFunc(*it);
    return acc;
}

RatFunc subst(const RatFunc& f, Var v, const RatFunc& value) {
    if (!f.depends_on(v)) return f;
    return subst_poly(f.num(), v, value) / subst_poly(f.den(), v, value);
}

}  // namespace pviheat

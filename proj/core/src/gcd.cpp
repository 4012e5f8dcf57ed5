#include "pviheat/gcd.hpp"

#include <algorithm>

#include "pviheat/errors.hpp"

namespace pviheat {
namespace {

struct BudgetExhausted {};

struct Budget {
    std::uint64_t left;
    void spend(std::uint64_t n) {
        if (n >= left) throw BudgetExhausted{};
        left -= n;
    }
};

Exponents min_exponents(const MultiPoly& p) {
    Exponents m;
    m.fill(0xffff);
    for (const auto& [e, c] : p.terms()) {
        for (int i = 0; i < kNumVars; ++i) m[i] = std::min(m[i], e[i]);
    }
    return m;
}

MultiPoly strip_monomial(const MultiPoly& p, const Exponents& m) {
    MultiPoly r;
    for (const auto& [e, c] : p.terms()) {
        Exponents es;
        for (int i = 0; i < kNumVars; ++i) es[i] = static_cast<std::uint16_t>(e[i] - m[i]);
        r.add_term(es, c);
    }
    return r;
}

int term_frequency(const MultiPoly& p, Var v) {
    int n = 0;
    for (const auto& [e, c] : p.terms())
        if (e[static_cast<int>(v)] > 0) ++n;
    return n;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b, Budget& bud);

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw KernelError("internal: inexact division in subresultant GCD");
    return *q;
}

/// Pseudo-remainder of dense coefficient vectors in the main variable.
std::vector<MultiPoly> prem(std::vector<MultiPoly> r, const std::vector<MultiPoly>& b,
                            Budget& bud) {
    const MultiPoly& lcb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    int e = static_cast<int>(r.size()) - 1 - db + 1;
    while (static_cast<int>(r.size()) - 1 >= db) {
        const MultiPoly lcr = r.back();
        const int d = static_cast<int>(r.size()) - 1 - db;
        bud.spend(8);
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            bud.spend(r[static_cast<std::size_t>(i)].term_count() + 1);
            r[static_cast<std::size_t>(i)] = lcb * r[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i <= db; ++i) {
            bud.spend(lcr.term_count() * b[static_cast<std::size_t>(i)].term_count() + 1);
            r[static_cast<std::size_t>(d + i)] -= lcr * b[static_cast<std::size_t>(i)];
        }
        while (!r.empty() && r.back().is_zero()) r.pop_back();
        --e;
        if (r.empty()) break;
    }
    if (e > 0) {
        MultiPoly f(1);
        for (int i = 0; i < e; ++i) f = f * lcb;
        for (auto& ri : r) ri = f * ri;
    }
    return r;
}

/// Content (gcd of the v-coefficients) of a poly seen as univariate in v.
MultiPoly content_in(const std::vector<MultiPoly>& coeffs, Budget& bud) {
    MultiPoly cont;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        cont = cont.is_zero() ? c.monic() : gcd_impl(cont, c, bud);
        if (cont.is_constant()) return MultiPoly(1);
    }
    return cont.is_zero() ? MultiPoly(1) : cont;
}

MultiPoly gcd_impl(MultiPoly a, MultiPoly b, Budget& bud) {
    if (a.is_zero()) return b.is_zero() ? MultiPoly() : b.monic();
    if (b.is_zero()) return a.monic();

    const Exponents ma = min_exponents(a);
    const Exponents mb = min_exponents(b);
    Exponents mg;
    for (int i = 0; i < kNumVars; ++i) mg[i] = std::min(ma[i], mb[i]);
    a = strip_monomial(a, ma);
    b = strip_monomial(b, mb);
    const MultiPoly mono = MultiPoly::monomial(mg, Rational(1));

    if (a.is_constant() || b.is_constant()) return mono;

    // Main variable: shared, most frequent across both term lists.
    int best = -1, best_freq = 0;
    for (int i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        int fa = term_frequency(a, v), fb = term_frequency(b, v);
        if (fa == 0 || fb == 0) continue;
        if (fa + fb > best_freq) {
            best_freq = fa + fb;
            best = i;
        }
    }
    if (best < 0) return mono;
    const Var v = static_cast<Var>(best);

    auto ca = a.coefficients_in(v);
    auto cb = b.coefficients_in(v);
    MultiPoly cont_a = content_in(ca, bud);
    MultiPoly cont_b = content_in(cb, bud);
    MultiPoly cont = gcd_impl(cont_a, cont_b, bud);

    std::vector<MultiPoly> A, B;
    for (auto& c : ca) A.push_back(cont_a.is_constant() ? c : exact_div(c, cont_a));
    for (auto& c : cb) B.push_back(cont_b.is_constant() ? c : exact_div(c, cont_b));
    if (A.size() < B.size()) std::swap(A, B);

    // Subresultant pseudo-remainder sequence on the primitive parts.
    MultiPoly g(1), h(1);
    while (true) {
        const int delta = static_cast<int>(A.size()) - static_cast<int>(B.size());
        auto R = prem(A, B, bud);
        if (R.empty()) break;
        if (R.size() == 1) {
            // v-free remainder: the primitive parts are coprime in v.
            return mono * cont;
        }
        MultiPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        for (auto& ri : R) {
            bud.spend(ri.term_count() + 1);
            ri = exact_div(ri, divisor);
        }
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (delta >= 1) {
            MultiPoly gd = g;
            for (int i = 1; i < delta; ++i) gd = gd * g;
            MultiPoly hd(1);
            for (int i = 1; i < delta; ++i) hd = hd * h;
            h = delta == 1 ? gd : exact_div(gd, hd);
        }
    }
    MultiPoly last = MultiPoly::from_coefficients_in(v, B);
    MultiPoly last_cont = content_in(B, bud);
    MultiPoly pp = last_cont.is_constant() ? last : exact_div(last, last_cont);
    return (mono * cont * pp).monic();
}

}  // namespace

MultiPoly monomial_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(1);
    const Exponents ma = min_exponents(a);
    const Exponents mb = min_exponents(b);
    Exponents mg;
    for (int i = 0; i < kNumVars; ++i) mg[i] = std::min(ma[i], mb[i]);
    return MultiPoly::monomial(mg, Rational(1));
}

namespace {

/// Univariate GCD degree over Q after specializing every other variable.
/// Returns -1 when the leading coefficient vanished at the chosen point.
int specialized_gcd_degree(const MultiPoly& a, const MultiPoly& b, Var v,
                           const std::array<Rational, kNumVars>& point) {
    const int iv = static_cast<int>(v);
    auto specialize = [&](const MultiPoly& p, int expected_deg) {
        std::vector<Rational> c(static_cast<std::size_t>(expected_deg) + 1, Rational(0));
        for (const auto& [e, coeff] : p.terms()) {
            Rational term = coeff;
            for (int i = 0; i < kNumVars; ++i) {
                if (i == iv || e[i] == 0) continue;
                for (int k = 0; k < e[i]; ++k) term *= point[static_cast<std::size_t>(i)];
            }
            c[e[iv]] += term;
        }
        while (!c.empty() && c.back() == 0) c.pop_back();
        return c;
    };
    auto ca = specialize(a, a.degree(v));
    auto cb = specialize(b, b.degree(v));
    if (static_cast<int>(ca.size()) - 1 != a.degree(v)) return -1;
    if (static_cast<int>(cb.size()) - 1 != b.degree(v)) return -1;
    while (!cb.empty()) {
        // ca mod cb
        while (static_cast<int>(ca.size()) >= static_cast<int>(cb.size())) {
            Rational q = ca.back() / cb.back();
            const std::size_t shift = ca.size() - cb.size();
            for (std::size_t i = 0; i < cb.size(); ++i) ca[shift + i] -= q * cb[i];
            while (!ca.empty() && ca.back() == 0) ca.pop_back();
            if (ca.empty()) break;
        }
        std::swap(ca, cb);
    }
    return static_cast<int>(ca.size()) - 1;
}

}  // namespace

bool probably_coprime(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant()) return true;
    std::uint64_t state = 0x853c49e6748fea9bULL;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 1009) - 504;
    };
    for (int i = 0; i < kNumVars; ++i) {
        const Var v = static_cast<Var>(i);
        if (!a.depends_on(v) || !b.depends_on(v)) continue;
        bool coprime_in_v = false;
        for (int attempt = 0; attempt < 4; ++attempt) {
            std::array<Rational, kNumVars> point;
            for (int j = 0; j < kNumVars; ++j) point[static_cast<std::size_t>(j)] = rat(next(), 1);
            const int d = specialized_gcd_degree(a, b, v, point);
            if (d == 0) {
                coprime_in_v = true;
                break;
            }
            if (d > 0) return false;  // evidence of a common factor involving v
        }
        if (!coprime_in_v) return false;  // could not certify; let the full GCD decide
    }
    return true;
}

std::optional<MultiPoly> try_poly_gcd(const MultiPoly& a, const MultiPoly& b,
                                      std::uint64_t budget) {
    Budget bud{budget};
    try {
        return gcd_impl(a, b, bud);
    } catch (const BudgetExhausted&) {
        return std::nullopt;
    }
}

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) {
    if (!a.is_zero() && !b.is_zero() && probably_coprime(a, b)) return MultiPoly(1);
    auto g = try_poly_gcd(a, b, 200'000'000);
    if (g) return *g;
    if (a.is_zero() || b.is_zero()) return MultiPoly(1);
    return monomial_gcd(a, b);
}

}  // namespace pviheat

#include "pviheat/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "pviheat/errors.hpp"

namespace pviheat {

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i) {
        if (name == var_name(static_cast<Var>(i))) return static_cast<Var>(i);
    }
    return std::nullopt;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal: " + s);
    q.canonicalize();
    return q;
}

MultiPoly::MultiPoly(const Rational& constant) {
    if (constant != 0) terms_[kZeroExponents] = constant;
}

MultiPoly::MultiPoly(long constant) : MultiPoly(Rational(constant)) {}

MultiPoly MultiPoly::variable(Var v) {
    Exponents e{};
    e[static_cast<int>(v)] = 1;
    MultiPoly p;
    p.terms_[e] = 1;
    return p;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& coeff) {
    MultiPoly p;
    if (coeff != 0) p.terms_[e] = coeff;
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExponents);
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw KernelError("constant_value on a non-constant polynomial");
    return terms_.begin()->second;
}

const Exponents& MultiPoly::leading_exponents() const {
    return std::prev(terms_.end())->first;
}

const Rational& MultiPoly::leading_coeff() const {
    return std::prev(terms_.end())->second;
}

int MultiPoly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max<int>(d, e[static_cast<int>(v)]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int i = 0; i < kNumVars; ++i) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, Rational(-c));
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    const MultiPoly& small = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& big = a.term_count() <= b.term_count() ? b : a;
    MultiPoly r;
    for (const auto& [ea, ca] : small.terms_) {
        for (const auto& [eb, cb] : big.terms_) {
            Exponents e;
            for (int i = 0; i < kNumVars; ++i)
                e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            r.add_term(e, Rational(ca * cb));
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r(1);
    MultiPoly base = *this;
    while (n > 0) {
        if (n & 1u) r = r * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
    const int iv = static_cast<int>(v);
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[iv] == 0) continue;
        Exponents de = e;
        de[iv] -= 1;
        r.add_term(de, Rational(c * e[iv]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(Var v) const {
    const int iv = static_cast<int>(v);
    std::vector<MultiPoly> coeffs(static_cast<std::size_t>(degree(v)) + 1);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const int k = rest[iv];
        rest[iv] = 0;
        coeffs[static_cast<std::size_t>(k)].add_term(rest, c);
    }
    return coeffs;
}

MultiPoly MultiPoly::from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs) {
    const int iv = static_cast<int>(v);
    MultiPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Exponents ek = e;
            ek[iv] = static_cast<std::uint16_t>(ek[iv] + k);
            r.add_term(ek, c);
        }
    }
    return r;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) throw KernelError("monic() on the zero polynomial");
    Rational inv = 1 / leading_coeff();
    MultiPoly r = *this;
    r *= inv;
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool has_vars = !(e == kZeroExponents);
        bool coeff_shown = (ac != 1) || !has_vars;
        if (coeff_shown) out << ac.get_str();
        bool need_star = coeff_shown;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << var_name(static_cast<Var>(i));
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) return std::nullopt;
    MultiPoly q;
    MultiPoly r = a;
    const Exponents& eb = b.leading_exponents();
    const Rational& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Exponents& er = r.leading_exponents();
        Exponents em;
        for (int i = 0; i < kNumVars; ++i) {
            if (er[i] < eb[i]) return std::nullopt;
            em[i] = static_cast<std::uint16_t>(er[i] - eb[i]);
        }
        Rational cm = r.leading_coeff() / cb;
        MultiPoly m = MultiPoly::monomial(em, cm);
        q += m;
        r -= m * b;
    }
    return q;
}

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
    if (p.is_zero()) return MultiPoly();
    // Square root of the leading term.
    const Exponents& le = p.leading_exponents();
    Exponents he;
    for (int i = 0; i < kNumVars; ++i) {
        if (le[i] % 2 != 0) return std::nullopt;
        he[i] = static_cast<std::uint16_t>(le[i] / 2);
    }
    Rational lc = p.leading_coeff();
    if (lc < 0) return std::nullopt;
    mpz_class num_root, den_root;
    if (mpz_perfect_square_p(lc.get_num_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(lc.get_den_mpz_t()) == 0) return std::nullopt;
    mpz_sqrt(num_root.get_mpz_t(), lc.get_num_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), lc.get_den_mpz_t());
    Rational hc(num_root, den_root);

    MultiPoly root = MultiPoly::monomial(he, hc);
    GrlexLess less;
    Exponents prev_lead = p.leading_exponents();
    for (int guard = 0; guard < 4096; ++guard) {
        MultiPoly rem = p - root * root;
        if (rem.is_zero()) return root;
        const Exponents& er = rem.leading_exponents();
        if (!less(er, prev_lead)) return std::nullopt;
        prev_lead = er;
        Exponents em;
        for (int i = 0; i < kNumVars; ++i) {
            if (er[i] < he[i]) return std::nullopt;
            em[i] = static_cast<std::uint16_t>(er[i] - he[i]);
        }
        root += MultiPoly::monomial(em, Rational(rem.leading_coeff() / (2 * hc)));
    }
    return std::nullopt;
}

}  // namespace pviheat

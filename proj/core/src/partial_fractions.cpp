#include "pviheat/partial_fractions.hpp"

#include "pviheat/derivation.hpp"

namespace pviheat {

RatFunc PartialFractions::recompose() const {
    RatFunc acc = polynomial_part;
    const RatFunc t = var(Var::t);
    for (const auto& part : parts) {
        const RatFunc lin = t - part.pole;
        for (std::size_t k = 0; k < part.coeffs.size(); ++k)
            acc += part.coeffs[k] / lin.pow(static_cast<int>(k) + 1);
    }
    return acc;
}

RatFunc PartialFractions::residue_at(const RatFunc& pole) const {
    for (const auto& part : parts)
        if (part.pole == pole && !part.coeffs.empty()) return part.coeffs[0];
    return RatFunc();
}

PartialFractions partial_fractions_t(const RatFunc& f, std::span<const RatFunc> poles) {
    const Derivation dt = Derivation::coordinate(Var::t);
    const RatFunc t = var(Var::t);

    std::vector<MultiPoly> factors;
    for (const RatFunc& p : poles) {
        if (!p.den().is_constant() || p.depends_on(Var::t))
            throw KernelError("pole must be a t-free polynomial expression: " + p.to_string());
        factors.push_back((t - p).num());
    }

    // Multiplicity of each declared factor in the denominator.
    MultiPoly rest = f.den();
    std::vector<int> mult(poles.size(), 0);
    for (std::size_t i = 0; i < poles.size(); ++i) {
        while (true) {
            auto q = divide_exact(rest, factors[i]);
            if (!q) break;
            rest = std::move(*q);
            ++mult[i];
        }
    }
    if (rest.depends_on(Var::t))
        throw KernelError("denominator has a t-factor outside the declared pole list: " +
                          rest.to_string());

    PartialFractions out;
    RatFunc principal_sum;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (mult[i] == 0) continue;
        PolePart part;
        part.pole = poles[i];
        part.coeffs.assign(static_cast<std::size_t>(mult[i]), RatFunc());
        // Laurent coefficients via derivatives of (t - p)^m * f at t = p.
        RatFunc h = RatFunc(factors[i]).pow(mult[i]) * f;
        Rational factorial(1);
        for (int k = 0; k < mult[i]; ++k) {
            if (k > 0) {
                h = dt(h);
                factorial *= k;
            }
            RatFunc coeff = subst(h, Var::t, poles[i]) / RatFunc(factorial);
            part.coeffs[static_cast<std::size_t>(mult[i] - 1 - k)] = coeff;
        }
        for (std::size_t k = 0; k < part.coeffs.size(); ++k)
            principal_sum += part.coeffs[k] / (t - poles[i]).pow(static_cast<int>(k) + 1);
        out.parts.push_back(std::move(part));
    }
    out.polynomial_part = f - principal_sum;
    if (out.polynomial_part.den().depends_on(Var::t))
        throw KernelError("internal: polynomial part of the decomposition is not t-polynomial");
    return out;
}

}  // namespace pviheat

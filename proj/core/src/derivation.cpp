#include "pviheat/derivation.hpp"

namespace pviheat {

Derivation& Derivation::set_image(Var v, RatFunc image) {
    images_[v] = std::move(image);
    inert_.erase(v);
    return *this;
}

Derivation& Derivation::set_inert(Var v) {
    inert_.insert(v);
    images_.erase(v);
    return *this;
}

Derivation Derivation::coordinate(Var v) {
    Derivation d;
    d.set_image(v, RatFunc(1L));
    return d;
}

RatFunc Derivation::apply(const MultiPoly& f) const {
    RatFunc out;
    for (int i = 0; i < kNumVars; ++i) {
        const Var v = static_cast<Var>(i);
        if (!f.depends_on(v)) continue;
        if (inert_.count(v)) throw InertSymbolError(var_name(v));
        auto it = images_.find(v);
        if (it == images_.end() || it->second.is_zero()) continue;
        out += RatFunc(f.derivative(v)) * it->second;
    }
    return out;
}

RatFunc Derivation::apply(const RatFunc& f) const {
    RatFunc dn = apply(f.num());
    if (f.den().is_constant()) return dn / RatFunc(f.den());
    RatFunc dd = apply(f.den());
    const RatFunc n(f.num()), d(f.den());
    return (dn * d - n * dd) / (d * d);
}

}  // namespace pviheat

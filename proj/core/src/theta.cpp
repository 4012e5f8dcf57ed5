#include "pviheat/theta.hpp"

namespace pviheat {

std::pair<PviParams, FuchsParams> theta_correspondence(const Theta& th) {
    const RatFunc half(rat(1, 2));
    const RatFunc quarter(rat(1, 4));
    PviParams p;
    p.alpha = half * th.inf * th.inf;
    p.beta = -half * th.zero * th.zero;
    p.gamma = half * th.one * th.one;
    p.delta = half * (RatFunc(1L) - th.x * th.x);
    FuchsParams f;
    f.A = quarter * (th.zero * th.zero - RatFunc(1L));
    f.B = quarter * (th.one * th.one - RatFunc(1L));
    f.C = quarter * (th.x * th.x - RatFunc(1L));
    f.E = quarter * th.inf * th.inf - RatFunc(1L) - f.A - f.B - f.C;
    return {p, f};
}

FuchsParams fuchs_from_pvi(const PviParams& p) {
    const RatFunc quarter(rat(1, 4));
    FuchsParams f;
    f.A = quarter * (-RatFunc(2L) * p.beta - RatFunc(1L));
    f.B = quarter * (RatFunc(2L) * p.gamma - RatFunc(1L));
    f.C = quarter * (-RatFunc(2L) * p.delta);
    f.E = RatFunc(rat(1, 2)) * p.alpha - RatFunc(1L) - f.A - f.B - f.C;
    return f;
}

PviParams pvi_from_fuchs(const FuchsParams& f) {
    const RatFunc half(rat(1, 2));
    PviParams p;
    p.alpha = RatFunc(2L) * (f.A + f.B + f.C + f.E + RatFunc(1L));
    p.beta = -half * (RatFunc(4L) * f.A + RatFunc(1L));
    p.gamma = half * (RatFunc(4L) * f.B + RatFunc(1L));
    p.delta = -RatFunc(2L) * f.C;
    return p;
}

}  // namespace pviheat

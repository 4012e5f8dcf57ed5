#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace pviheat {

/// Fixed global variable set.  t is the spectral variable of the linear ODE,
/// x the deformation variable, u the Painleve function and u1 its x-derivative.
/// th_* are the monodromy exponents.  gp (= G'(x)), g (the free gauge term),
/// c (a fresh shift constant) and p (the canonical momentum) are inert symbols:
/// they carry no flow image and may never be differentiated by the x-flow.
enum class Var : int {
    t = 0,
    x,
    u,
    u1,
    th_inf,
    th_0,
    th_1,
    th_x,
    gp,
    g,
    c,
    p,
};

inline constexpr int kNumVars = 12;

constexpr const char* var_name(Var v) {
    constexpr const char* names[kNumVars] = {
        "t", "x", "u", "u1", "th_inf", "th_0", "th_1", "th_x", "gp", "g", "c", "p"};
    return names[static_cast<int>(v)];
}

std::optional<Var> var_from_name(std::string_view name);

/// One exponent per variable, in the fixed global ordering.
using Exponents = std::array<std::uint16_t, kNumVars>;

inline constexpr Exponents kZeroExponents{};

}  // namespace pviheat

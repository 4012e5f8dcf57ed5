#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "pviheat/errors.hpp"
#include "pviheat/multipoly.hpp"

namespace pviheat {

/// Reduced quotient of two multivariate polynomials.  Normalization removes
/// the common polynomial factor and scales the denominator to be monic under
/// grlex, so equal rational functions compare equal coefficientwise.
/// Correctness never depends on the reduction succeeding: on GCD budget
/// exhaustion the fraction is stored unreduced and zero-testing still works
/// (a fraction is zero iff its canonical numerator is the empty term map).
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rational& q) : num_(q), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long n) : num_(n), den_(1) {}             // NOLINT(google-explicit-constructor)
    RatFunc(MultiPoly num);                           // NOLINT(google-explicit-constructor)
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(Var v) { return RatFunc(MultiPoly::variable(v)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;

    bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }
    int degree(Var v) const { return std::max(num_.degree(v), den_.degree(v)); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& r) { return *this = *this + r; }
    RatFunc& operator-=(const RatFunc& r) { return *this = *this - r; }
    RatFunc& operator*=(const RatFunc& r) { return *this = *this * r; }
    RatFunc& operator/=(const RatFunc& r) { return *this = *this / r; }
    RatFunc pow(int n) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a - b).is_zero();
    }

    /// Exact evaluation.  Every variable occurring in the function must be
    /// assigned; throws KernelError when the denominator vanishes.
    Rational eval(const std::map<Var, Rational>& point) const;

    /// Floating-point evaluation over the full variable array.
    double eval_double(const std::array<double, kNumVars>& point) const;

    std::string to_string() const;

private:
    void normalize();

    MultiPoly num_, den_;
};

enum class ZeroTestMode { exact, probabilistic };

/// Exact mode is sound and complete (canonical-numerator emptiness).
/// Probabilistic mode evaluates at seeded random rational points away from the
/// poles; a nonzero value proves nonzeroness, an all-zero outcome is only a
/// fast filter.  Throws KernelError when no non-pole point is found within the
/// retry budget.
bool is_zero(const RatFunc& f, ZeroTestMode mode, std::uint64_t seed = 0);

/// Substitutes `value` for every occurrence of `v`.
RatFunc subst(const RatFunc& f, Var v, const RatFunc& value);
RatFunc subst_poly(const MultiPoly& f, Var v, const RatFunc& value);

inline RatFunc var(Var v) { return RatFunc::variable(v); }

}  // namespace pviheat

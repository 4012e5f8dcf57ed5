#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pviheat/rational.hpp"
#include "pviheat/vars.hpp"

namespace pviheat {

/// Graded lexicographic order on exponent vectors: compare total degree first,
/// ties broken by the first differing variable in the fixed global ordering.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int ta = 0, tb = 0;
        for (int i = 0; i < kNumVars; ++i) {
            ta += a[i];
            tb += b[i];
        }
        if (ta != tb) return ta < tb;
        for (int i = 0; i < kNumVars; ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

/// Sparse multivariate polynomial over the rationals, kept in canonical form:
/// a term map with no stored zero coefficients.  Equality of the maps is
/// equality of the polynomials.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& constant);
    explicit MultiPoly(long constant);

    static MultiPoly variable(Var v);
    static MultiPoly monomial(const Exponents& e, const Rational& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the value for a constant polynomial).
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Leading term under grlex.  Precondition: not zero.
    const Exponents& leading_exponents() const;
    const Rational& leading_coeff() const;

    int degree(Var v) const;
    int total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    void add_term(const Exponents& e, const Rational& coeff);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }
    MultiPoly& operator*=(const Rational& s);
    MultiPoly pow(unsigned n) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

    MultiPoly derivative(Var v) const;

    /// Coefficient polynomials with respect to one variable:
    /// result[k] is the coefficient of v^k (with v stripped from the exponents).
    std::vector<MultiPoly> coefficients_in(Var v) const;
    static MultiPoly from_coefficients_in(Var v, const std::vector<MultiPoly>& coeffs);

    /// Divides each coefficient by the grlex leading coefficient (makes the
    /// polynomial monic).  Precondition: not zero.
    MultiPoly monic() const;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Exact quotient a / b when b divides a; nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Exact polynomial square root, when the argument is a perfect square.
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

}  // namespace pviheat

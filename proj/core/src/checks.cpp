#include "pviheat/checks.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <utility>

#include "pviheat/elimination.hpp"
#include "pviheat/local_analysis.hpp"
#include "pviheat/partial_fractions.hpp"

namespace pviheat {
namespace {

using Witnesses = std::vector<std::pair<std::string, RatFunc>>;

std::string fnv1a_digest(const Witnesses& ws) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [name, w] : ws) {
        feed(name);
        feed("=");
        feed(w.to_string());
        feed(";");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Probabilistic pre-filter (fast counterexample search), then the exact
/// verdict.  The seed never influences the verdict, only the filter points.
bool witness_zero(const RatFunc& w, std::uint64_t seed) {
    if (!is_zero(w, ZeroTestMode::probabilistic, seed)) return false;
    return w.is_zero();
}

RatFunc theta_poly_of_u(const Theta& th) {
    const RatFunc one(1L);
    const RatFunc x = var(Var::x), u = var(Var::u);
    return th.zero * (u - one) * (u - x) + th.one * u * (u - x) +
           (th.x - one) * u * (u - one);
}

/// theta with th_inf moved onto the Riccati locus and u1 solving R = 0.
std::pair<Theta, RatFunc> riccati_locus(const Theta& th) {
    const RatFunc one(1L);
    const RatFunc x = var(Var::x);
    Theta locus{one - th.zero - th.one - th.x, th.zero, th.one, th.x};
    const RatFunc u1_locus = -theta_poly_of_u(th) / (x * (x - one));
    return {locus, u1_locus};
}

Witnesses check_compat(const Theta& th, std::string& detail) {
    const LaxPair lax = build_lax(th);
    const RatFunc residual = compat_residual(lax.L1, lax.L2, x_flow(th));
    detail =
        "commutator reduced on the basis {psi, d/dt psi}; equivalent closed form "
        "-(1/2)(S_x|flow + W S_t + 2 W_t S + W_ttt)";
    return {{"compatibility residual", residual}};
}

Witnesses check_gauge(const Theta& th, std::string& detail) {
    const LaxPair lax = build_lax(th);
    const GaugeLog gauge = gauge_log_derivatives(th);
    const Derivation dt = Derivation::coordinate(Var::t);
    const TransformedPair pair = transform_lax(lax.L1, lax.L2, gauge, th);

    Witnesses ws;
    ws.emplace_back("gauge cross-consistency", dt(gauge.lam_x) - x_flow(th)(gauge.lam_t));

    // Independent residue recomposition of the Psi-coefficient.
    const RatFunc one(1L);
    const RatFunc x = var(Var::x), u = var(Var::u);
    const std::array<RatFunc, 4> poles = {RatFunc(), one, x, u};
    const PartialFractions pf = partial_fractions_t(pair.L1p.c_0, poles);
    const Residues rs = residues(th);
    const RatFunc scale = RatFunc(4L) * u * (u - one) * (u - x);
    ws.emplace_back("residue at t=0", pf.residue_at(poles[0]) * scale - rs.r0);
    ws.emplace_back("residue at t=1", pf.residue_at(poles[1]) * scale - rs.r1);
    ws.emplace_back("residue at t=x", pf.residue_at(poles[2]) * scale - rs.rx);
    ws.emplace_back("residue at t=u", pf.residue_at(poles[3]) * scale - RatFunc(2L) * rs.ru);
    ws.emplace_back("no double poles left",
                    pair.L1p.c_0 - pf.recompose());
    detail = "conjugated pair certified against the display templates; "
             "psi-coefficient recomposed from the four residues";
    return ws;
}

Witnesses check_residues(const Theta& th, std::string& detail) {
    const RatFunc one(1L), two(2L);
    const RatFunc x = var(Var::x), u = var(Var::u);
    const RiccatiForms rf = riccati_forms(th);
    const Residues rs = residues(th);
    Witnesses ws;
    ws.emplace_back("Ru is R itself", rs.ru - rf.R_of(th.zero, th.one, th.x));
    ws.emplace_back("Rx product identity",
                    -rs.rx * x * (x - one) -
                        (rf.R_of(th.zero, th.one, th.x) *
                             rf.R_of(-th.zero, -th.one, two - th.x) +
                         rf.K * u * (u - one) * (u - x) * (u - x)));
    const auto [locus_theta, u1_locus] = riccati_locus(th);
    const Residues locus_rs = residues(locus_theta);
    ws.emplace_back("R0 on the Riccati locus", subst(locus_rs.r0, Var::u1, u1_locus));
    ws.emplace_back("R1 on the Riccati locus", subst(locus_rs.r1, Var::u1, u1_locus));
    ws.emplace_back("Rx on the Riccati locus", subst(locus_rs.rx, Var::u1, u1_locus));
    ws.emplace_back("Ru on the Riccati locus", subst(locus_rs.ru, Var::u1, u1_locus));
    detail = "display formulas and vanishing on the one-parameter locus";
    return ws;
}

Witnesses check_hamiltonian(const Theta& th, std::string& detail) {
    Witnesses ws;
    ws.emplace_back("canonical polynomial form", hamiltonian_check(th));

    // Second Hamilton equation along the nonlinear flow.
    const RatFunc one(1L);
    const RatFunc x = var(Var::x), u = var(Var::u), pp = var(Var::p);
    const RiccatiForms rf = riccati_forms(th);
    const Residues rs = residues(th);
    const RatFunc uuu = u * (u - one) * (u - x);
    const RatFunc H = -rs.rx / (RatFunc(4L) * uuu);
    const RatFunc p_of = rf.R_of(th.zero, th.one, th.x) / (RatFunc(2L) * uuu);
    const RatFunc u1_of_p =
        (RatFunc(2L) * uuu * pp - theta_poly_of_u(th)) / (x * (x - one));
    Derivation du;
    du.set_image(Var::u, RatFunc(1L));
    const RatFunc dHdu = subst(du(subst(H, Var::u1, u1_of_p)), Var::p, p_of);
    ws.emplace_back("second Hamilton equation", x_flow(th)(p_of) + dHdu);
    detail = "-Rx/(4u(u-1)(u-x)) is the polynomial Hamiltonian and generates the flow";
    return ws;
}

Witnesses check_apparent(const Theta& th, std::string& detail) {
    const LaxPair lax = build_lax(th);
    const RatFunc one(1L), half(rat(1, 2));
    const RatFunc x = var(Var::x), u = var(Var::u);
    Witnesses ws;

    auto scheme_row = [&ws](const char* where, std::pair<RatFunc, RatFunc> got,
                            const RatFunc& lo, const RatFunc& hi) {
        const RatFunc direct = (got.first - lo) * (got.first - lo) +
                               (got.second - hi) * (got.second - hi);
        const RatFunc swapped = (got.first - hi) * (got.first - hi) +
                                (got.second - lo) * (got.second - lo);
        ws.emplace_back(std::string("scheme row ") + where,
                        direct.is_zero() || swapped.is_zero() ? RatFunc() : direct);
    };
    scheme_row("t=0", indicial_exponents(lax.L1, RatFunc()), half * (one - th.zero),
               half * (one + th.zero));
    scheme_row("t=1", indicial_exponents(lax.L1, one), half * (one - th.one),
               half * (one + th.one));
    scheme_row("t=x", indicial_exponents(lax.L1, x), half * (one - th.x),
               half * (one + th.x));
    scheme_row("t=u", indicial_exponents(lax.L1, u), -half, RatFunc(rat(3, 2)));
    scheme_row("t=infinity", indicial_exponents(lax.L1, AtInfinity{}),
               half * (one - th.inf), half * (one + th.inf));
    ws.emplace_back("log-free expansion at t=u",
                    frobenius_obstruction(lax.L1, u, -half, 2));
    detail = "all five scheme rows and the gap-2 obstruction at the extra singularity";
    return ws;
}

Witnesses check_eliminate(const Theta& th, std::string& detail) {
    const LaxPair lax = build_lax(th);
    const TransformedPair pair =
        transform_lax(lax.L1, lax.L2, gauge_log_derivatives(th), th);
    const EliminationStep step = eliminate_apparent_pole(pair.L1p, pair.L2p, th);
    const RatFunc one(1L);
    const RatFunc t = var(Var::t), x = var(Var::x);
    Witnesses ws;
    ws.emplace_back("multiplier closed form",
                    step.lambda13 + one / (t * (t - one) * (t - x)));
    const LinOp recombined = pair.L1p + step.lambda13 * pair.L2p;
    ws.emplace_back("linear combination property, Psi coefficient",
                    recombined.c_0 - step.L15.c_0);
    for (const RatFunc* c : {&step.L15.c_tt, &step.L15.c_t, &step.L15.c_x, &step.L15.c_0})
        if (subst_poly(c->den(), Var::t, var(Var::u)).is_zero())
            throw CertificationError(
                "combined equation: a denominator still vanishes at t = u");
    detail = "pole at t=u cancelled; multiplier matches -1/(t(t-1)(t-x)); "
             "no denominator vanishes on t = u";
    return ws;
}

Witnesses check_F(const Theta& th, std::string& detail) {
    const RatFunc F = compute_F(th);  // asserts extraction == display internally
    if (F.depends_on(Var::t))
        throw CertificationError("remainder depends on t");
    const RatFunc one(1L);
    const RatFunc x = var(Var::x), u = var(Var::u);
    const auto [locus_theta, u1_locus] = riccati_locus(th);
    const RatFunc F_locus = subst(compute_F(locus_theta), Var::u1, u1_locus);
    const RatFunc sum = th.zero + th.one + th.x;
    Witnesses ws;
    ws.emplace_back("Riccati-locus value",
                    F_locus - (sum - one) * (u - x) / RatFunc(2L));
    detail = "t-free remainder matches its display formula; hypergeometric-locus value "
             "(sum(theta)-1)(u-x)/2";
    return ws;
}

Witnesses check_heat(const Theta& th, std::string& detail) {
    auto [heat, cert] = heat_operator(th, GaugeChoice::symbolic);
    Witnesses ws = cert.witnesses;
    for (const RatFunc* c : {&heat.c_tt, &heat.c_t, &heat.c_x, &heat.c_0})
        if (c->depends_on(Var::u) || c->depends_on(Var::u1))
            throw CertificationError("heat coefficient depends on the trajectory");
    // Gauge-shift covariance: g -> g + c moves only the Psi coefficient, by -c.
    const LinOp shifted{subst(heat.c_tt, Var::g, var(Var::g) + var(Var::c)),
                        subst(heat.c_t, Var::g, var(Var::g) + var(Var::c)),
                        subst(heat.c_x, Var::g, var(Var::g) + var(Var::c)),
                        subst(heat.c_0, Var::g, var(Var::g) + var(Var::c))};
    ws.emplace_back("gauge-shift covariance, d2t", shifted.c_tt - heat.c_tt);
    ws.emplace_back("gauge-shift covariance, dt", shifted.c_t - heat.c_t);
    ws.emplace_back("gauge-shift covariance, dx", shifted.c_x - heat.c_x);
    ws.emplace_back("gauge-shift covariance, Psi",
                    shifted.c_0 - (heat.c_0 - var(Var::c)));
    detail = "final operator certified; coefficients free of u, u1; arbitrary "
             "constant shifts only the potential";
    return ws;
}

Witnesses check_picard(const Theta&, std::string& detail) {
    const LinOp pic = picard_reduction();
    const RatFunc one(1L);
    const RatFunc t = var(Var::t);
    Witnesses ws;
    ws.emplace_back("second-derivative coefficient", pic.c_tt - t * (t - one));
    ws.emplace_back("first-derivative coefficient", pic.c_t - (RatFunc(2L) * t - one));
    ws.emplace_back("potential", pic.c_0 - RatFunc(rat(1, 4)));

    // Term-by-term annihilation of the (1/2,1/2;1) hypergeometric series:
    // (n+1/2)^2 a_n = (n+1)^2 a_{n+1}.
    Rational a(1);
    RatFunc recurrence_defect;
    for (int n = 0; n < 24; ++n) {
        const Rational lhs = Rational(a * rat(2 * n + 1, 2) * rat(2 * n + 1, 2));
        const Rational a_next = Rational(lhs / ((n + 1) * (n + 1)));
        const Rational series = Rational(a * rat((2 * n + 1) * (2 * n + 1), 4) -
                                         a_next * (n + 1) * (n + 1));
        recurrence_defect += RatFunc(series);
        a = a_next;
    }
    ws.emplace_back("hypergeometric annihilation to order 24", recurrence_defect);
    detail = "theta=0, g=0 reduction divided by (t-x) is the elliptic-period operator";
    return ws;
}

using CheckFn = Witnesses (*)(const Theta&, std::string&);

const std::vector<std::pair<std::string, CheckFn>>& table() {
    static const std::vector<std::pair<std::string, CheckFn>> t = {
        {"compat", check_compat},       {"gauge", check_gauge},
        {"residues", check_residues},   {"hamiltonian", check_hamiltonian},
        {"apparent", check_apparent},   {"eliminate", check_eliminate},
        {"F", check_F},                 {"heat", check_heat},
        {"picard", check_picard},
    };
    return t;
}

}  // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : table()) out.push_back(name);
        return out;
    }();
    return names;
}

CheckReport run_check(const std::string& name, const Theta& theta, std::uint64_t seed) {
    CheckReport report;
    report.check_name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        CheckFn fn = nullptr;
        for (const auto& [n, f] : table())
            if (n == name) fn = f;
        if (!fn) throw std::invalid_argument("unknown check name: " + name);

        std::string detail;
        Witnesses ws = fn(theta, detail);
        report.witness_digest = fnv1a_digest(ws);
        report.status = "pass";
        for (const auto& [wname, w] : ws)
            if (!witness_zero(w, seed)) {
                report.status = "fail";
                detail = "nonzero witness: " + wname;
                break;
            }
        report.detail = detail;
    } catch (const CertificationError& e) {
        report.status = "fail";
        report.detail = e.what();
        report.witness_digest = "-";
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        report.status = "error";
        report.detail = e.what();
        report.witness_digest = "-";
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::vector<CheckReport> run_all_checks(const Theta& theta, std::uint64_t seed) {
    std::vector<CheckReport> out;
    for (const auto& name : check_names()) out.push_back(run_check(name, theta, seed));
    return out;
}

}  // namespace pviheat

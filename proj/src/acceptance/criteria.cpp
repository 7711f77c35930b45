#include "fermatlab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "fermatlab/errors.hpp"
#include "fermatlab/families/adjudicate.hpp"
#include "fermatlab/symbolic/wp_series.hpp"
#include "fermatlab/verify/diagnostics.hpp"
#include "fermatlab/verify/scan.hpp"
#include "fermatlab/verify/zeros.hpp"

namespace fermatlab::acceptance {

using families::BetaKind;
using families::FamilyParams;
using families::SolutionFamily;
using verify::Json;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kScanTolerance = 1e-8;

struct Check {
    bool ok = true;
    std::ostringstream why;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (!ok) why << "; ";
        ok = false;
        why << what;
    }
};

std::string sci(double v) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << v;
    return out.str();
}

verify::ScanWindow standardWindow() { return verify::ScanWindow{}; }

FamilyParams withBeta(BetaKind beta) {
    FamilyParams p;
    p.beta = beta;
    return p;
}

/// ZERO-verdict Fermat families of criteria 3 and 6, built for one β.
std::vector<SolutionFamily> zeroFermatFamilies(const Constants& c, BetaKind beta) {
    FamilyParams p = withBeta(beta);
    FamilyParams wp = p;
    wp.invariantsOverride = c.equianharmonic;
    std::vector<SolutionFamily> out;
    out.push_back(families::buildCaseI(families::AlphaKind::Exp, p));
    for (int eta = 0; eta < 3; ++eta) out.push_back(families::buildCaseII(eta, wp));
    for (int eta = 0; eta < 3; ++eta) out.push_back(families::buildCaseIII(eta, wp));
    out.push_back(families::buildUnitUnit(p));
    out.push_back(families::buildMOne(3, p));
    if (beta == BetaKind::Identity) out.push_back(families::buildCorollaryWitness(p));
    return out;
}

std::string label(const SolutionFamily& f) {
    std::string s = f.id;
    for (const auto& [k, v] : f.paramList) {
        if (k == "eta" || k == "zeta" || k == "variant" || k == "sign" || k == "tau" || k == "beta") s += " " + k + "=" + v;
    }
    return s;
}

Json scanSummary(const verify::Report& r) { return verify::reportJson(r); }

// 1 ------------------------------------------------------------------------
void odeOracle(const Constants& c, Check& check, Json& art) {
    for (const auto* inv : {&c.equianharmonic, &c.caseFour, &c.tauZero}) {
        const auto s = symbolic::odeResidualSeries<RationalComplex>(*inv, 40);
        check.require(s.isZero() && s.precision() > 40, "ODE series nonzero for " + inv->describe());
        art.push_back(Json{{"invariants", inv->describe()}, {"zero_through_order", 40}, {"zero", s.isZero()}});
    }
}

// 2 ------------------------------------------------------------------------
void engineSelfValidation(const Constants& c, Check& check, Json& art) {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto* inv : {&c.equianharmonic, &c.caseFour, &c.tauZero}) {
        const wp::Weierstrass engine(*inv);
        const Complex w1 = 2.0 * engine.halfPeriods().omega1;
        const Complex w3 = 2.0 * engine.halfPeriods().omega3;
        double worstOde = 0.0;
        double worstPeriod = 0.0;
        int accepted = 0;
        while (accepted < 200) {
            const Complex z = unit(rng) * w1 + unit(rng) * w3;
            if (std::abs(engine.reduce(z)) < 0.05) continue;
            ++accepted;
            const auto v = engine.evaluate(z);
            const Complex ode = v.wpPrime * v.wpPrime - 4.0 * std::pow(v.wp, 3) + inv->g2 * v.wp + inv->g3;
            worstOde = std::max(worstOde, std::abs(ode) / (1.0 + std::pow(std::abs(v.wp), 3)));
            for (const Complex p : {w1, w3}) {
                worstPeriod = std::max(worstPeriod, std::abs(engine.evaluate(z + p).wp - v.wp));
            }
        }
        check.require(worstOde < 1e-8, "ODE residual " + sci(worstOde) + " for " + inv->describe());
        check.require(worstPeriod < 1e-7, "periodicity deviation " + sci(worstPeriod) + " for " + inv->describe());
        art.push_back(Json{{"invariants", inv->describe()},
                           {"points", accepted},
                           {"max_scaled_ode_residual", worstOde},
                           {"max_periodicity_deviation", worstPeriod},
                           {"omega1", verify::complexJson(engine.halfPeriods().omega1)},
                           {"omega3", verify::complexJson(engine.halfPeriods().omega3)}});
    }
    const double oracle = omega1Oracle();
    const wp::Weierstrass engine(c.equianharmonic);
    const double diff = std::abs(engine.halfPeriods().omega1 - Complex(oracle, 0.0));
    check.require(diff < 1e-4, "omega1 " + sci(std::abs(engine.halfPeriods().omega1)) + " vs quadrature " + sci(oracle));
    art.push_back(Json{{"omega1_oracle", oracle}, {"omega1_engine", verify::complexJson(engine.halfPeriods().omega1)},
                       {"difference", diff}});
}

// 3 ------------------------------------------------------------------------
void zeroVerdicts(const Constants& c, Check& check, Json& art) {
    const auto window = standardWindow();
    for (const BetaKind beta : {BetaKind::Identity, BetaKind::Exp}) {
        std::vector<SolutionFamily> fams = zeroFermatFamilies(c, beta);
        FamilyParams p = withBeta(beta);
        fams.push_back(families::buildQuadratic(p.rho, families::SignConvention::Plus, p));
        FamilyParams cp = p;
        cp.invariantsOverride = c.tauZero;
        fams.push_back(families::buildCubic(parseNumber("0"), cp));
        for (const auto& fam : fams) {
            const auto v = families::adjudicate(fam);
            const auto r = verify::residualScan(fam, window, kScanTolerance);
            check.require(v.zero(), label(fam) + " adjudicated " + toString(v.outcome));
            check.require(!v.routesAgree || *v.routesAgree, label(fam) + " series route disagrees");
            check.require(r.verdict == verify::ScanVerdict::Pass,
                          label(fam) + " residual scan " + toString(r.verdict) + " p95 " + sci(r.p95Residual));
            art.push_back(Json{{"family", label(fam)}, {"verdict", verify::verdictJson(v)}, {"scan", scanSummary(r)}});
        }
    }
}

// 4 ------------------------------------------------------------------------
symbolic::Polynomial caseFourOracle() {
    return symbolic::Polynomial({RationalComplex::fraction(1, 12), RationalComplex::fraction(1, 36), RationalComplex(0),
                                 RationalComplex(-4), RationalComplex::fraction(44, 3)});
}

void nonzeroVerdicts(const Constants& c, Check& check, Json& art) {
    const auto expected = caseFourOracle();
    const auto window = standardWindow();
    std::optional<symbolic::Polynomial> rawOne;
    for (int variant = 1; variant <= 2; ++variant) {
        for (int zeta = 0; zeta < 4; ++zeta) {
            FamilyParams p;
            p.invariantsOverride = c.caseFour;
            const auto fam = families::buildCaseIV(variant, zeta, p);
            const auto v = families::adjudicate(fam);
            check.require(!v.zero(), label(fam) + " adjudicated ZERO");
            check.require(v.quotient.has_value() && *v.canonicalEven == expected && v.quotient->odd.isZero(),
                          label(fam) + " residual " + (v.quotient ? v.quotient->even.toString("P") : "missing"));
            if (variant == 1 && zeta == 0) rawOne = v.quotient->even;
            if (variant == 2 && rawOne) {
                check.require(v.quotient->even == -*rawOne, "variant 2 raw residual is not the negative of variant 1");
            }
            Json entry{{"family", label(fam)}, {"verdict", verify::verdictJson(v)}};
            if (zeta == 0) {
                const auto r = verify::residualScan(fam, window, kScanTolerance);
                check.require(r.verdict == verify::ScanVerdict::Fail, label(fam) + " residual scan " + toString(r.verdict));
                entry["scan"] = scanSummary(r);
            }
            art.push_back(entry);
        }
    }
    const FamilyParams p;
    const auto fam = families::buildQuadratic(p.rho, families::SignConvention::Minus, p);
    const auto v = families::adjudicate(fam);
    const auto r = verify::residualScan(fam, window, kScanTolerance);
    check.require(!v.zero(), "quadratic minus adjudicated ZERO");
    check.require(r.verdict == verify::ScanVerdict::Fail, "quadratic minus residual scan " + toString(r.verdict));
    art.push_back(Json{{"family", label(fam)}, {"verdict", verify::verdictJson(v)}, {"scan", scanSummary(r)}});
}

// 5 ------------------------------------------------------------------------
void discriminantIdentity(const Constants&, Check& check, Json& art) {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 40);
    for (int k = 0; k < 20; ++k) {
        RationalComplex tau = RationalComplex::fraction(num(rng), den(rng));
        if (k % 2 == 1) tau = tau + RationalComplex::fraction(num(rng), den(rng)) * RationalComplex::i();
        const auto d = wp::discriminantOfTau(tau.toComplex(), tau);
        const auto diff = d.exactDifference();
        check.require(diff && diff->isZero(), "brace and factored forms differ at tau=" + tau.toString());
        art.push_back(Json{{"tau", tau.toString()}, {"brace_form", d.exactBraceForm ? d.exactBraceForm->toString() : ""},
                           {"difference_zero", diff && diff->isZero()}});
    }
    const auto zero = wp::discriminantOfTau(0.0, RationalComplex(0));
    const auto minusOne = wp::discriminantOfTau(-1.0, RationalComplex(-1));
    check.require(zero.exactBraceForm && *zero.exactBraceForm == RationalComplex(-5038848), "Delta(0) != -5038848");
    check.require(minusOne.exactBraceForm && minusOne.exactBraceForm->isZero(), "Delta(-1) != 0");
    art.push_back(Json{{"delta_0", zero.exactBraceForm->toString()}, {"delta_minus_1", minusOne.exactBraceForm->toString()}});
}

// 6 ------------------------------------------------------------------------
void derivativeIdentity(const Constants& c, Check& check, Json& art) {
    const auto window = standardWindow();
    for (const BetaKind beta : {BetaKind::Identity, BetaKind::Exp}) {
        std::vector<SolutionFamily> fams = zeroFermatFamilies(c, beta);
        FamilyParams wp = withBeta(beta);
        wp.invariantsOverride = c.equianharmonic;
        for (int eta = 0; eta < 3; ++eta) fams.push_back(families::buildCaseV(eta, wp));
        fams.push_back(families::buildPicardPair(3, 2, parseNumber("1/2+1/2i"), withBeta(beta)));
        for (const auto& fam : fams) {
            const auto r = verify::derivativeIdentityScan(fam, window, kScanTolerance);
            check.require(r.verdict == verify::ScanVerdict::Pass,
                          label(fam) + " derivative identity " + toString(r.verdict) + " p95 " + sci(r.p95Residual));
            art.push_back(Json{{"family", label(fam)}, {"scan", scanSummary(r)}});
        }
    }
}

// 7 ------------------------------------------------------------------------
void secondDerivativeIdentity(const Constants& c, Check& check, Json& art) {
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const char* text : {"0", "0.3+0.2i", "1"}) {
        const ParsedNumber tau = parseNumber(text);
        const wp::Invariants inv = tau.exact && tau.exact->isZero() ? c.tauZero : wp::invariantsFromTau(tau.value, tau.exact);
        const wp::Weierstrass engine(inv);
        const Complex t = tau.value;
        const Complex expected = 13.5 * t * std::cbrt(4.0) * (8.0 - t * t * t);
        const double shortest = engine.shortestPeriod();
        const Complex w1 = 2.0 * engine.halfPeriods().omega1;
        const Complex w3 = 2.0 * engine.halfPeriods().omega3;
        std::vector<Complex> values;
        double spread = 0.0;
        double offset = 0.0;
        while (values.size() < 50) {
            const Complex z = unit(rng) * w1 + unit(rng) * w3;
            if (std::abs(engine.reduce(z)) < 0.25 * shortest) continue;
            const Complex p = engine.evaluate(z).wp;
            const Complex second = cauchySecondDerivative(engine, z, 0.05 * shortest);
            const Complex k = second - 6.0 * p * p;
            offset = std::max(offset, std::abs(k - expected));
            if (!values.empty()) spread = std::max(spread, std::abs(k - values.front()));
            values.push_back(k);
        }
        check.require(spread < 1e-8, std::string("wp'' - 6 wp^2 varies by ") + sci(spread) + " at tau=" + text);
        check.require(offset < 1e-8, std::string("wp'' - 6 wp^2 misses the constant by ") + sci(offset) + " at tau=" + text);
        art.push_back(Json{{"tau", text},
                           {"expected", verify::complexJson(expected)},
                           {"first_value", verify::complexJson(values.front())},
                           {"max_spread", spread},
                           {"max_offset", offset}});
    }
}

// 8 ------------------------------------------------------------------------
void zeroSetDemo(const Constants&, Check& check, Json& art) {
    const auto fam = families::buildFamily("exp-pair", FamilyParams{});
    const verify::ScanWindow window{-1.0, 1.0, -7.0, 7.0};
    const auto zf = verify::zeroScan(fam.f.derivative(), window);
    const auto zg = verify::zeroScan(fam.g.derivative(), window);
    check.require(zf.roots.empty(), "Z(f') is not empty");
    const double pi = std::numbers::pi;
    std::vector<Complex> expected{{0, -2 * pi}, {0, -pi}, {0, 0}, {0, pi}, {0, 2 * pi}};
    check.require(zg.roots.size() == expected.size(), "Z(g') has " + std::to_string(zg.roots.size()) + " roots");
    for (const Complex e : expected) {
        bool found = false;
        for (const auto& r : zg.roots) {
            if (std::abs(r.location - e) < 1e-9) {
                found = true;
                check.require(r.multiplicity == 1, "multiplicity " + std::to_string(r.multiplicity) + " at a zero of g'");
            }
        }
        check.require(found, "no zero of g' within 1e-9 of " + std::to_string(e.imag()) + "i");
    }
    const auto cmp = verify::zeroSetCompare(zf, zg, verify::Relation::StrictSubset, verify::MultiplicityMode::Counting);
    check.require(cmp.holds, "Z(f') is not a strict subset of Z(g') counting multiplicity");
    art.push_back(Json{{"zeros_f_prime", verify::zeroSetJson(zf)},
                       {"zeros_g_prime", verify::zeroSetJson(zg)},
                       {"comparison", verify::comparisonJson(cmp, verify::Relation::StrictSubset,
                                                             verify::MultiplicityMode::Counting)}});
}

// 9 ------------------------------------------------------------------------
void diagnosticsLimits(const Constants&, Check& check, Json& art) {
    for (const char* text : {"0", "0.3+0.2i"}) {
        for (const auto kind : {verify::DiagnosticKind::H1, verify::DiagnosticKind::H2}) {
            const auto r = verify::diagnoseTau(kind, parseNumber(text));
            check.require(r.limit && r.limit->error < 1e-2, toString(kind) + " limit off by " +
                                                                sci(r.limit ? r.limit->error : INFINITY) + " at tau=" + text);
            art.push_back(verify::diagnosticJson(r));
        }
    }
}

struct CriterionDef {
    const char* title;
    double budget;
    void (*run)(const Constants&, Check&, Json&);
};

const CriterionDef kCriteria[] = {
    {"Weierstrass ODE oracle: exact series residual zero through order 40", 1.0, odeOracle},
    {"Engine self-validation: ODE, periodicity, omega1 vs quadrature", 5.0, engineSelfValidation},
    {"ZERO verdicts and passing residual scans", 20.0, zeroVerdicts},
    {"NONZERO verdicts: case IV residual and quadratic minus sign", 5.0, nonzeroVerdicts},
    {"Discriminant identity", 1.0, discriminantIdentity},
    {"Derivative identity on ZERO-verdict Fermat families", 10.0, derivativeIdentity},
    {"wp'' - 6 wp^2 constant", 3.0, secondDerivativeIdentity},
    {"Zero-set demonstration: Z(f') strict subset of Z(g')", 5.0, zeroSetDemo},
    {"H1 and H2 leading coefficients", 3.0, diagnosticsLimits},
};

}  // namespace

Constants Constants::standard() {
    return {wp::Invariants::exact(RationalComplex(0), RationalComplex(1)),
            wp::Invariants::exact(RationalComplex::fraction(-1, 12), RationalComplex::fraction(-1, 6)),
            wp::Invariants::exact(RationalComplex(0), RationalComplex(432))};
}

Constants Constants::corrupted() {
    Constants c = standard();
    c.equianharmonic = wp::Invariants::exact(RationalComplex(0), RationalComplex::fraction(101, 100));
    return c;
}

double omega1Oracle() {
    // t = e₁ + s² removes the endpoint singularity: dt/√(4t³−1) = ds/√(t² + e₁t + e₁²).
    const double e1 = std::cbrt(0.25);
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate([e1](double s) {
        const double t = e1 + s * s;
        return 1.0 / std::sqrt(t * t + e1 * t + e1 * e1);
    });
}

Complex cauchySecondDerivative(const wp::Weierstrass& engine, Complex z, double r, int nodes) {
    // ℘″(z) = (2/2πi)∮ ℘(ζ)/(ζ − z)³ dζ = (2/(r²N)) Σ ℘(z + re^{iθ}) e^{−2iθ}.
    Complex sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * k / nodes);
        sum += engine.evaluate(z + r * u).wp / (u * u);
    }
    return 2.0 * sum / (r * r * nodes);
}

CriterionResult runCriterion(int id, const Constants& constants) {
    CriterionResult out;
    out.id = id;
    out.artifact = Json::array();
    const auto start = std::chrono::steady_clock::now();
    Check check;
    if (id >= 1 && id <= 9) {
        const CriterionDef& def = kCriteria[id - 1];
        out.title = def.title;
        out.budgetSeconds = def.budget;
        try {
            def.run(constants, check, out.artifact);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
    } else if (id == 10) {
        out.title = "Determinism: two suite runs give byte-identical JSON";
        out.budgetSeconds = 60.0;
        std::vector<CriterionResult> first;
        std::vector<CriterionResult> second;
        for (int k = 1; k <= 9; ++k) first.push_back(runCriterion(k, constants));
        for (int k = 1; k <= 9; ++k) second.push_back(runCriterion(k, constants));
        const std::string a = artifactsJson(first);
        const std::string b = artifactsJson(second);
        check.require(a == b, "the two runs produced different JSON");
        out.artifact.push_back(Json{{"bytes", a.size()}, {"identical", a == b}});
    } else {
        throw InvalidInput("criterion id must be 1.." + std::to_string(kCriterionCount));
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(out.seconds <= out.budgetSeconds, "took " + sci(out.seconds) + " s, budget " + sci(out.budgetSeconds) + " s");
    out.passed = check.ok;
    out.detail = check.ok ? "ok" : check.why.str();
    return out;
}

std::vector<CriterionResult> runAcceptance(const Constants& constants) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(runCriterion(id, constants));
    return out;
}

std::string artifactsJson(const std::vector<CriterionResult>& results) {
    Json all = Json::array();
    for (const auto& r : results) {
        if (r.id <= 9) all.push_back(Json{{"criterion", r.id}, {"passed", r.passed}, {"artifact", r.artifact}});
    }
    return verify::dumpJson(all);
}

std::string summaryTable(const std::vector<CriterionResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        char head[64];
        std::snprintf(head, sizeof head, "[%s] criterion %2d  %7.3f s  ", r.passed ? "PASS" : "FAIL", r.id, r.seconds);
        out << head << r.title;
        if (!r.passed) out << "\n       " << r.detail;
        out << "\n";
    }
    return out.str();
}

Json summaryJson(const std::vector<CriterionResult>& results) {
    Json list = Json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        list.push_back(Json{{"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"detail", r.detail},
                            {"seconds", r.seconds},
                            {"budget_seconds", r.budgetSeconds}});
    }
    return Json{{"all_passed", all}, {"criteria", list}};
}

}  // namespace fermatlab::acceptance

#include "fermatlab/verify/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "fermatlab/errors.hpp"
#include "fermatlab/verify/zeros.hpp"

namespace fermatlab::verify {

using families::BatchEvaluator;
using families::Expr;

namespace {

Expr num(long p, long q = 1) { return Expr::exactConstant(RationalComplex::fraction(p, q)); }

Expr tauExpr(const ParsedNumber& tau) {
    return tau.exact ? Expr::exactConstant(*tau.exact, "tau") : Expr::constant(tau.value, "tau");
}

Expr cbrt4() { return Expr::constant(AlgebraicConstants::get().cbrt4, "cbrt(4)"); }

// Direction of the sampling ray; avoids the symmetry axes of the lattices in use.
const Complex kRay = std::polar(1.0, 0.37);

LimitEstimate limitOf(const Expr& h, const Expr& wp, int power, Complex expected) {
    LimitEstimate est;
    est.power = power;
    est.expected = expected;
    const double radii[] = {1e-2, 1e-3};
    simd::ComplexArray pts(2);
    for (int k = 0; k < 2; ++k) pts.set(static_cast<std::size_t>(k), radii[k] * kRay);
    BatchEvaluator ev(std::move(pts));
    const auto& hv = ev.evaluate(h);
    const auto& pv = ev.evaluate(wp);
    for (std::size_t k = 0; k < 2; ++k) {
        est.samples.push_back({radii[k], hv.at(k) / std::pow(pv.at(k), power)});
    }
    const double a = radii[0] * radii[0];
    const double b = radii[1] * radii[1];
    est.extrapolated = (a * est.samples[1].value - b * est.samples[0].value) / (a - b);
    est.error = std::abs(est.extrapolated - expected);
    return est;
}

GridMinimum cellMinimum(const Expr& h, const wp::Weierstrass& engine, std::size_t perSide) {
    GridMinimum m;
    m.minModulus = INFINITY;
    BatchEvaluator ev(fundamentalCellGrid(engine, perSide));
    const auto& v = ev.evaluate(h);
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double a = std::abs(v.at(k));
        if (std::isfinite(a) && a < m.minModulus) {
            m.minModulus = a;
            m.argmin = ev.points().at(k);
        }
    }
    // Squared factors give double zeros, so iterate on h/h′.
    const Expr dh = h.derivative();
    const Expr ddh = dh.derivative();
    Complex z = m.argmin;
    double last = INFINITY;
    for (int step = 0; step < 60; ++step) {
        const Complex v = h.evaluate(z);
        const Complex d = dh.evaluate(z);
        const Complex delta = v * d / (d * d - v * ddh.evaluate(z));
        if (!isFinite(delta)) break;
        z -= delta;
        last = std::abs(delta);
        if (last < 1e-12 * std::max(1.0, std::abs(z))) break;
    }
    if (last < 1e-6) {
        m.zero = engine.reduce(z);
        m.modulusAtZero = std::abs(h.evaluate(*m.zero));
    }
    return m;
}

}  // namespace

std::string toString(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::H0:
            return "H0";
        case DiagnosticKind::H1:
            return "H1";
        case DiagnosticKind::H2:
            return "H2";
    }
    return "?";
}

DiagnosticKind parseDiagnosticKind(const std::string& text) {
    if (text == "H0" || text == "h0") return DiagnosticKind::H0;
    if (text == "H1" || text == "h1") return DiagnosticKind::H1;
    if (text == "H2" || text == "h2") return DiagnosticKind::H2;
    throw InvalidInput("unknown diagnostic '" + text + "' (H0, H1, H2)");
}

Expr diagnosticH1(const Expr& wp, const ParsedNumber& tau) {
    const Expr t = tauExpr(tau);
    const Expr t3 = Expr::pow(t, 3);
    const Expr inner = -(t * cbrt4() * wp) + num(12) + num(3) * t3;
    return num(4) * Expr::pow(wp, 3) + num(27) * t * cbrt4() * (num(8) - t3) * wp +
           num(54) * (Expr::pow(t, 6) + num(20) * t3 - num(8)) - num(9) * Expr::pow(inner, 2);
}

Expr diagnosticH2(const Expr& wp, const Expr& wpPrime, const wp::Invariants& inv, const ParsedNumber& tau) {
    const Expr t = tauExpr(tau);
    const Expr g2 = inv.exactG2 ? Expr::exactConstant(*inv.exactG2, "g2") : Expr::constant(inv.g2, "g2");
    const Expr wpSecond = num(6) * Expr::pow(wp, 2) - num(1, 2) * g2;
    const Expr first = cbrt4() * Expr::pow(wpPrime, 2) - (cbrt4() * wp + num(9) * Expr::pow(t, 2)) * wpSecond;
    const Expr second = num(36) * cbrt4() * (Expr::pow(t, 3) + num(1)) * wpPrime;
    return Expr::pow(first, 2) - Expr::pow(second, 2);
}

Expr diagnosticH0(const families::SolutionFamily& family) {
    const Expr df = family.f.derivative();
    const Expr dg = family.g.derivative();
    return df * Expr::pow(dg, 2) / ((Expr::pow(family.f, family.m) - num(1)) * (Expr::pow(family.g, family.n) - num(1)));
}

DiagnosticReport diagnoseTau(DiagnosticKind kind, const ParsedNumber& tau, std::size_t cellPerSide) {
    if (kind == DiagnosticKind::H0) throw InvalidInput("H0 needs a family, not tau");
    const wp::Invariants inv = wp::invariantsFromTau(tau.value, tau.exact);
    const auto engine = std::make_shared<const wp::Weierstrass>(inv);
    const Expr w = Expr::variable();
    const Expr P = Expr::wp(engine, w);
    const Expr X = Expr::wpPrime(engine, w);
    DiagnosticReport r;
    r.kind = kind;
    r.context = "tau=" + (tau.exact ? tau.exact->toString() : std::to_string(tau.value.real()));
    Expr h;
    if (kind == DiagnosticKind::H1) {
        h = diagnosticH1(P, tau);
        r.limit = limitOf(h, P, 3, 4.0);
    } else {
        h = diagnosticH2(P, X, inv, tau);
        const double c = 2.0 * std::cbrt(4.0);
        r.limit = limitOf(h, P, 6, c * c);
    }
    r.cellMinimum = cellMinimum(h, *engine, cellPerSide);
    if (r.cellMinimum->zero) {
        r.notes.push_back("beta = identity: the sampled H has zeros in the fundamental cell; the nonvanishing "
                          "statement is a consequence of the contradiction hypothesis, not of the formula");
    }
    return r;
}

DiagnosticReport diagnoseH0(const families::SolutionFamily& family, const ScanWindow& window) {
    if (family.kind != families::EquationKind::Fermat) throw InvalidInput("H0 needs a Fermat-kind family");
    DiagnosticReport r;
    r.kind = DiagnosticKind::H0;
    r.context = "family=" + family.id;
    const Expr h = diagnosticH0(family);
    BatchEvaluator ev(window.points());
    const auto& v = ev.evaluate(h);
    std::vector<double> mods;
    r.gridPoints = v.size();
    for (std::size_t k = 0; k < v.size(); ++k) {
        const double a = std::abs(v.at(k));
        if (std::isfinite(a)) mods.push_back(a);
    }
    r.gridFinite = mods.size();
    if (!mods.empty()) {
        r.gridMaxModulus = *std::max_element(mods.begin(), mods.end());
        std::nth_element(mods.begin(), mods.begin() + static_cast<std::ptrdiff_t>(mods.size() / 2), mods.end());
        r.gridMedianModulus = mods[mods.size() / 2];
    }
    const Expr denom = (Expr::pow(family.f, family.m) - num(1)) * (Expr::pow(family.g, family.n) - num(1));
    try {
        const ZeroSet zs = zeroScan(denom, window);
        for (const auto& z : zs.roots) {
            CircleBound b;
            b.center = z.location;
            for (const double radius : {1e-2, 1e-3}) {
                simd::ComplexArray pts(64);
                for (std::size_t k = 0; k < 64; ++k) pts.set(k, z.location + std::polar(radius, 6.283185307179586 * k / 64.0));
                BatchEvaluator circle(std::move(pts));
                const auto& cv = circle.evaluate(h);
                double m = 0.0;
                for (std::size_t k = 0; k < cv.size(); ++k) m = std::max(m, std::abs(cv.at(k)));
                (radius > 5e-3 ? b.maxAtOuter : b.maxAtInner) = m;
            }
            r.nearPoints.push_back(b);
        }
    } catch (const AnalyzerFailure& e) {
        r.notes.push_back(std::string("zeros of (f^m - 1)(g^n - 1) not located: ") + e.what());
    }
    return r;
}

}  // namespace fermatlab::verify

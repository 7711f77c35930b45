#include "fermatlab/wp/invariants.hpp"

#include <cmath>
#include <sstream>

#include "fermatlab/errors.hpp"

namespace fermatlab::wp {

Invariants Invariants::exact(const RationalComplex& g2, const RationalComplex& g3) {
    return {g2.toComplex(), g3.toComplex(), g2, g3};
}

Invariants Invariants::approx(Complex g2, Complex g3) { return {g2, g3, std::nullopt, std::nullopt}; }

Complex Invariants::discriminant() const { return g2 * g2 * g2 - 27.0 * g3 * g3; }

void Invariants::requireNondegenerate() const {
    if (!isFinite(g2) || !isFinite(g3)) throw InvalidInput("non-finite invariants");
    if (isExact()) {
        const RationalComplex delta = exactG2->pow(3) - RationalComplex(27) * exactG3->pow(2);
        if (delta.isZero()) throw DegenerateLattice("modular discriminant vanishes: " + describe());
        return;
    }
    const double scale = std::pow(std::abs(g2), 3) + 27.0 * std::norm(g3);
    if (!(std::abs(discriminant()) > 1e-12 * scale)) {
        throw DegenerateLattice("modular discriminant vanishes: " + describe());
    }
}

std::string Invariants::describe() const {
    std::ostringstream out;
    out.precision(17);
    if (isExact()) {
        out << "g2=" << exactG2->toString() << ", g3=" << exactG3->toString();
    } else {
        out << "g2=" << g2 << ", g3=" << g3;
    }
    return out.str();
}

CaseId parseCaseId(std::string_view text) {
    std::string t(text);
    if (t.rfind("case", 0) == 0) t = t.substr(4);
    if (t == "II" || t == "2") return CaseId::II;
    if (t == "III" || t == "3") return CaseId::III;
    if (t == "IV" || t == "4") return CaseId::IV;
    throw InvalidInput("unknown case id '" + std::string(text) + "' (expected II, III or IV)");
}

Invariants invariantsFromCase(CaseId id) {
    switch (id) {
        case CaseId::II:
        case CaseId::III:
            // (℘′)² = 4℘³ − 1
            return Invariants::exact(RationalComplex(0), RationalComplex(1));
        case CaseId::IV:
            // (℘′)² = 4℘³ + ℘/12 + 1/6
            return Invariants::exact(RationalComplex::fraction(-1, 12), RationalComplex::fraction(-1, 6));
    }
    throw InvalidInput("unknown case id");
}

namespace {

bool tauCubeIsMinusOne(Complex tau, const std::optional<RationalComplex>& exactTau) {
    if (exactTau) return exactTau->pow(3) == RationalComplex(-1);
    return std::abs(tau * tau * tau + 1.0) < 1e-12;
}

}  // namespace

Invariants invariantsFromTau(Complex tau, const std::optional<RationalComplex>& exactTau) {
    if (tauCubeIsMinusOne(tau, exactTau)) {
        throw DegenerateLattice("tau^3 = -1: the Weierstrass cubic has a repeated root");
    }
    if (exactTau && exactTau->isZero()) return Invariants::exact(RationalComplex(0), RationalComplex(432));
    const Complex cbrt4 = AlgebraicConstants::get().cbrt4;
    const Complex t3 = tau * tau * tau;
    const Complex g2 = -27.0 * tau * cbrt4 * (8.0 - t3);
    const Complex g3 = -54.0 * (t3 * t3 + 20.0 * t3 - 8.0);
    Invariants inv = Invariants::approx(g2, g3);
    if (exactTau) inv.exactG3 = RationalComplex(-54) * (exactTau->pow(6) + RationalComplex(20) * exactTau->pow(3) - RationalComplex(8));
    return inv;
}

std::optional<RationalComplex> TauDiscriminant::exactDifference() const {
    if (!exactBraceForm || !exactFactoredForm) return std::nullopt;
    return *exactBraceForm - *exactFactoredForm;
}

TauDiscriminant discriminantOfTau(Complex tau, const std::optional<RationalComplex>& exactTau) {
    TauDiscriminant d{};
    const Complex cbrt4 = AlgebraicConstants::get().cbrt4;
    const Complex t3 = tau * tau * tau;
    const Complex brace_g2 = -27.0 * tau * cbrt4 * (8.0 - t3);
    const Complex brace_g3 = 54.0 * (t3 * t3 + 20.0 * t3 - 8.0);
    d.braceForm = brace_g2 * brace_g2 * brace_g2 - 27.0 * brace_g3 * brace_g3;
    d.factoredForm = -5038848.0 * (t3 + 1.0) * (t3 + 1.0) * (t3 + 1.0);
    if (exactTau) {
        const RationalComplex t = *exactTau;
        const RationalComplex t3e = t.pow(3);
        // {−27τ·4^{1/3}(8−τ³)}³ = 4·{−27τ(8−τ³)}³
        const RationalComplex rational_part = RationalComplex(-27) * t * (RationalComplex(8) - t3e);
        const RationalComplex g3_part = RationalComplex(54) * (t3e * t3e + RationalComplex(20) * t3e - RationalComplex(8));
        d.exactBraceForm = RationalComplex(4) * rational_part.pow(3) - RationalComplex(27) * g3_part.pow(2);
        d.exactFactoredForm = RationalComplex(-5038848) * (t3e + RationalComplex(1)).pow(3);
    }
    return d;
}

}  // namespace fermatlab::wp

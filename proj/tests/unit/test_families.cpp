#include <doctest.h>

#include <cmath>

#include "fermatlab/errors.hpp"
#include "fermatlab/families/families.hpp"
#include "gen.hpp"

using namespace fermatlab;
using namespace fermatlab::families;

namespace {

RationalComplex q(long n, long d = 1) { return RationalComplex::fraction(n, d); }

std::vector<SolutionFamily> sampleFamilies() {
    std::vector<SolutionFamily> out;
    for (const auto& id : familyIds()) out.push_back(buildFamily(id, FamilyParams{}));
    FamilyParams p;
    p.beta = BetaKind::Exp;
    out.push_back(buildCaseII(1, p));
    out.push_back(buildQuadratic(parseNumber("-3/7+i"), SignConvention::Plus, p));
    out.push_back(buildCubic(parseNumber("0.3+0.2i")));
    out.push_back(buildCaseI(AlphaKind::TanHalf));
    out.push_back(buildCaseI(AlphaKind::Identity));
    return out;
}

/// Pointwise residual at a point away from poles, or NaN.
double residualAt(const SolutionFamily& fam, Complex z) {
    const Complex f = fam.f.evaluate(z);
    const Complex g = fam.g.evaluate(z);
    const Complex r = fam.residual().evaluate(z);
    if (!isFinite(r) || std::abs(f) > 1e3 || std::abs(g) > 1e3) return NAN;
    return std::abs(r) / (1.0 + std::pow(std::abs(f), fam.m) + std::pow(std::abs(g), fam.n));
}

}  // namespace

TEST_CASE("every family id builds") {
    for (const auto& id : familyIds()) {
        CAPTURE(id);
        const auto fam = buildFamily(id, FamilyParams{});
        CHECK(fam.f.valid());
        CHECK(fam.g.valid());
        CHECK_FALSE(fam.printedForm.empty());
    }
    CHECK_THROWS_AS(buildFamily("case7", FamilyParams{}), InvalidInput);
}

TEST_CASE("construction hypotheses are enforced") {
    CHECK_THROWS_AS(buildQuadratic(parseNumber("1"), SignConvention::Plus), HypothesisViolation);
    CHECK_THROWS_AS(buildQuadratic(parseNumber("-1"), SignConvention::Minus), HypothesisViolation);
    CHECK_THROWS_AS(buildCubic(parseNumber("-1")), DegenerateLattice);
    CHECK_THROWS_AS(buildCaseII(3), InvalidInput);
    CHECK_THROWS_AS(buildCaseIV(1, 4), InvalidInput);
    CHECK_THROWS_AS(buildCaseIV(3, 0), InvalidInput);
    FamilyParams p;
    p.ell = 2;
    CHECK_THROWS_AS(buildCorollaryWitness(p), InvalidInput);
}

TEST_CASE("families carry their exponents") {
    CHECK(buildCaseI(AlphaKind::Exp).m == 2);
    CHECK(buildCaseII(0).m == 3);
    CHECK(buildCaseII(0).n == 3);
    CHECK(buildCaseIII(0).m == 2);
    CHECK(buildCaseIII(0).n == 3);
    CHECK(buildCaseV(0).m == 3);
    CHECK(buildCaseV(0).n == 2);
    CHECK(buildCaseIV(1, 0).n == 4);
    CHECK(buildCaseVI(1, 0).m == 4);
    CHECK(buildMOne(5).m == 5);
    CHECK(buildCaseII(0).usesWp());
    CHECK_FALSE(buildUnitUnit().usesWp());
    const auto inv = *buildCaseIV(1, 0).invariants;
    CHECK(*inv.exactG2 == q(-1, 12));
    CHECK(*inv.exactG3 == q(-1, 6));
}

TEST_CASE("analytic derivative matches central differences") {
    testgen::Gen gen(51);
    for (const auto& fam : sampleFamilies()) {
        CAPTURE(fam.id);
        for (const Expr& e : {fam.f, fam.g}) {
            const Expr d = e.derivative();
            int checked = 0;
            for (int k = 0; k < 40 && checked < 6; ++k) {
                const Complex z = gen.complex(1.5);
                const double h = 1e-5;
                const Complex fd = (e.evaluate(z + h) - e.evaluate(z - h)) / (2.0 * h);
                const Complex an = d.evaluate(z);
                if (!isFinite(fd) || !isFinite(an) || std::abs(an) > 1e3) continue;
                ++checked;
                CHECK(std::abs(fd - an) < 1e-5 * (1.0 + std::abs(an)));
            }
        }
    }
}

TEST_CASE("pointwise residuals are small for the vanishing families") {
    testgen::Gen gen(52);
    for (const auto& fam : sampleFamilies()) {
        if (fam.id == "case4" || fam.id == "case6") continue;
        if (fam.kind == EquationKind::Quadratic && fam.params.sign == SignConvention::Minus) continue;
        CAPTURE(fam.id);
        int checked = 0;
        for (int k = 0; k < 60 && checked < 10; ++k) {
            const double r = residualAt(fam, gen.complex(2.0));
            if (std::isnan(r)) continue;
            ++checked;
            CHECK(r < 1e-9);
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("case IV residual is visibly nonzero") {
    const auto fam = buildCaseIV(1, 0);
    testgen::Gen gen(53);
    double worst = 0.0;
    for (int k = 0; k < 40; ++k) {
        const double r = residualAt(fam, gen.complex(1.5));
        if (!std::isnan(r)) worst = std::max(worst, r);
    }
    CHECK(worst > 1e-3);
}

TEST_CASE("expression substitution and constants") {
    const Expr w = Expr::variable();
    const Expr e = Expr::exp(w) * w + Expr::exactConstant(q(3));
    const Expr sub = e.substitute(w * w);
    const Complex z(0.3, -0.4);
    CHECK(testgen::relErr(sub.evaluate(z), std::exp(z * z) * z * z + 3.0) < 1e-15);
    CHECK(Expr::exactConstant(q(2, 3)).exactValue() == q(2, 3));
    CHECK((Expr::exactConstant(q(2)) * Expr::exactConstant(q(5))).exactValue() == q(10));
    CHECK_FALSE(Expr::constant(std::sqrt(2.0)).exactValue().has_value());
    CHECK(Expr::pow(w, -2).evaluate(0.5) == Complex(4.0));
    CHECK(std::isnan((Expr::exactConstant(q(1)) / w).evaluate(0.0).real()));
}

TEST_CASE("exact series evaluation") {
    const Expr w = Expr::variable();
    const auto s = seriesThrough<RationalComplex>(Expr::exp(w) - Expr::exactConstant(q(1)), 10);
    CHECK(s.coefficient(1) == q(1));
    CHECK(s.coefficient(7) == q(1, 5040));
    const auto fam = buildCaseII(0);
    CHECK_THROWS_AS(seriesThrough<RationalComplex>(fam.f, 8), NotExact);  // carries √3
    const auto approx = seriesThrough<Complex>(fam.f, 8);
    CHECK(approx.valuation() < 0);
    CHECK_THROWS_AS(seriesThrough<RationalComplex>(Expr::exp(Expr::exp(w)), 5), NotExact);
}

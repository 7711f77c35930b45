#include <doctest.h>

#include "fermatlab/families/adjudicate.hpp"
#include "fermatlab/families/catalog.hpp"
#include "gen.hpp"

using namespace fermatlab;
using namespace fermatlab::families;

namespace {

RationalComplex q(long n, long d = 1) { return RationalComplex::fraction(n, d); }

const symbolic::Polynomial& caseFourResidual() {
    static const symbolic::Polynomial p({q(1, 12), q(1, 36), q(0), q(-4), q(44, 3)});
    return p;
}

}  // namespace

TEST_CASE("verdict table") {
    struct Row {
        SolutionFamily family;
        Outcome expected;
    };
    FamilyParams expBeta;
    expBeta.beta = BetaKind::Exp;
    std::vector<Row> rows{
        {buildCaseI(AlphaKind::Exp), Outcome::Zero},
        {buildCaseI(AlphaKind::TanHalf), Outcome::Zero},
        {buildCaseI(AlphaKind::Constant), Outcome::Zero},
        {buildCaseII(0), Outcome::Zero},
        {buildCaseII(2, expBeta), Outcome::Zero},
        {buildCaseIII(1), Outcome::Zero},
        {buildCaseV(2), Outcome::Zero},
        {buildCaseIV(1, 0), Outcome::NonZero},
        {buildCaseIV(2, 3), Outcome::NonZero},
        {buildCaseVI(1, 2), Outcome::NonZero},
        {buildQuadratic(parseNumber("5/4"), SignConvention::Plus), Outcome::Zero},
        {buildQuadratic(parseNumber("5/4"), SignConvention::Minus), Outcome::NonZero},
        {buildCubic(parseNumber("0")), Outcome::Zero},
        {buildCubic(parseNumber("1")), Outcome::Zero},
        {buildCubic(parseNumber("0.3+0.2i")), Outcome::Zero},
        {buildUnitUnit(), Outcome::Zero},
        {buildMOne(3), Outcome::Zero},
        {buildMOne(6, expBeta), Outcome::Zero},
        {buildPicardPair(3, 2, parseNumber("1/2+1/2i")), Outcome::Zero},
        {buildCorollaryWitness(), Outcome::Zero},
        {buildFamily("exp-pair", FamilyParams{}), Outcome::Zero},
    };
    for (const auto& row : rows) {
        CAPTURE(row.family.id);
        CAPTURE(row.family.printedForm);
        const auto v = adjudicate(row.family);
        CHECK((v.outcome == row.expected));
        if (v.routesAgree) CHECK(*v.routesAgree);
    }
}

TEST_CASE("case IV residual polynomial") {
    for (int variant = 1; variant <= 2; ++variant) {
        for (int zeta = 0; zeta < 4; ++zeta) {
            const auto v = adjudicate(buildCaseIV(variant, zeta));
            REQUIRE(v.quotient.has_value());
            CHECK(*v.canonicalEven == caseFourResidual());
            CHECK(v.canonicalOdd->isZero());
            CHECK(v.quotient->even == (variant == 1 ? caseFourResidual() : -caseFourResidual()));
        }
    }
    const auto six = adjudicate(buildCaseVI(1, 0));
    CHECK(*six.canonicalEven == caseFourResidual());
}

TEST_CASE("quadratic sign convention") {
    testgen::Gen gen(61);
    for (int k = 0; k < 12; ++k) {
        RationalComplex rho = gen.gaussian(9, 4);
        if (rho.isZero() || rho * rho == q(1)) continue;
        CAPTURE(rho.toString());
        const auto r = quadraticSignReport(parseNumber(rho.toString()));
        CHECK(r.vanishing == "plus");
        CHECK(r.plus.zero());
        CHECK_FALSE(r.minus.zero());
    }
    CHECK(quadraticSignReport(parseNumber("0")).vanishing == "both");
}

TEST_CASE("a corrupted invariant is detected") {
    FamilyParams p;
    p.invariantsOverride = wp::Invariants::exact(q(0), q(101, 100));
    CHECK_FALSE(adjudicate(buildCaseII(0, p)).zero());
    CHECK_FALSE(adjudicate(buildCaseIII(0, p)).zero());
    FamilyParams cubic;
    cubic.invariantsOverride = wp::Invariants::exact(q(0), q(431));
    CHECK_FALSE(adjudicate(buildCubic(parseNumber("0"), cubic)).zero());
}

TEST_CASE("series route alone") {
    AdjudicateOptions options;
    options.order = 24;
    const auto v = adjudicate(buildCaseII(0), options);
    REQUIRE(v.seriesOutcome.has_value());
    CHECK((*v.seriesOutcome == Outcome::Zero));
    const auto bad = adjudicate(buildCaseIV(1, 1), options);
    REQUIRE(bad.seriesOutcome.has_value());
    CHECK((*bad.seriesOutcome == Outcome::NonZero));
    const auto picard = adjudicate(buildPicardPair(3, 2, parseNumber("1/2+1/2i")));
    CHECK((picard.method != Method::QuotientRing));
}

TEST_CASE("catalog lists every constructor") {
    const auto entries = catalogEntries();
    CHECK(entries.size() >= 15);
    const auto md = catalogMarkdown(entries);
    for (const auto& id : familyIds()) {
        if (id == "exp-pair") continue;
        CHECK(md.find(id) != std::string::npos);
    }
    CHECK(md.find("NONZERO") != std::string::npos);
    CHECK(renderQuotient(caseFourResidual(), symbolic::Polynomial(), "P") == "44/3*P^4 - 4*P^3 + 1/36*P + 1/12");
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fermatlab/errors.hpp"
#include "fermatlab/verify/diagnostics.hpp"
#include "fermatlab/verify/scan.hpp"
#include "fermatlab/verify/zeros.hpp"
#include "gen.hpp"

using namespace fermatlab;
using namespace fermatlab::verify;
using families::Expr;

namespace {

Expr w() { return Expr::variable(); }
Expr c(Complex v) { return Expr::constant(v); }

int totalMultiplicityAt(const ZeroSet& s, Complex z) {
    int m = 0;
    for (const auto& r : s.roots)
        if (std::abs(r.location - z) < 1e-6) m += r.multiplicity;
    return m;
}

}  // namespace

TEST_CASE("scan window grid") {
    ScanWindow win;
    CHECK(win.columns() == 81);
    CHECK(win.rows() == 81);
    const auto pts = win.points();
    REQUIRE(pts.size() == 6561);
    CHECK(pts.at(0) == Complex(-2.0, -2.0));
    CHECK(pts.at(1) == Complex(-2.0, -1.95));
    CHECK(pts.at(81) == Complex(-1.95, -2.0));
    CHECK(pts.at(6560) == Complex(2.0, 2.0));
    const auto p = parseWindow("-1,1,-7,7");
    CHECK(p.reMin == -1.0);
    CHECK(p.imMax == 7.0);
    CHECK(p.describe() == "-1,1,-7,7");
    CHECK(p.contains({0.0, 6.9}));
    CHECK_FALSE(p.contains({1.1, 0.0}));
    CHECK_THROWS_AS(parseWindow("1,2,3"), InvalidInput);
    CHECK_THROWS_AS(parseWindow("2,1,0,1").validate(), InvalidInput);
    ScanWindow sparse;
    sparse.density = 2;
    CHECK_THROWS_AS(sparse.validate(), InvalidInput);
}

TEST_CASE("residual scans") {
    const ScanWindow win;
    const auto pass = residualScan(families::buildCaseIII(0), win, 1e-8);
    CHECK((pass.verdict == ScanVerdict::Pass));
    CHECK(pass.pointsTotal == 6561);
    CHECK(pass.p95Residual < 1e-10);
    CHECK(pass.failures.empty());
    CHECK(pass.points.size() == pass.pointsTotal);

    const auto fail = residualScan(families::buildCaseIV(2, 0), win, 1e-8);
    CHECK((fail.verdict == ScanVerdict::Fail));
    CHECK(fail.failures.size() == Report::kMaxFailures);
    CHECK(fail.maxResidual >= fail.p95Residual);

    const auto cubic = residualScan(families::buildCubic(parseNumber("0.3+0.2i")), win, 1e-8);
    CHECK((cubic.verdict == ScanVerdict::Pass));

    // A window that sits inside the exclusion disc around the pole at 0.
    const auto poles = residualScan(families::buildCaseII(0), parseWindow("-0.02,0.02,-0.02,0.02"), 1e-8);
    CHECK((poles.verdict == ScanVerdict::Inconclusive));
    CHECK(poles.pointsExcluded > poles.pointsTotal / 5);
}

TEST_CASE("derivative identity scans") {
    CHECK((derivativeIdentityScan(families::buildCaseII(1), ScanWindow{}, 1e-8).verdict == ScanVerdict::Pass));
    CHECK((derivativeIdentityScan(families::buildCaseIV(1, 0), ScanWindow{}, 1e-8).verdict == ScanVerdict::Fail));
    CHECK_THROWS_AS(derivativeIdentityScan(families::buildCubic(parseNumber("0")), ScanWindow{}, 1e-8), InvalidInput);
}

TEST_CASE("zero scan of polynomials with known roots") {
    testgen::Gen gen(71);
    const auto win = parseWindow("-2,2,-2,2");
    for (int trial = 0; trial < 12; ++trial) {
        // Random roots with multiplicities 1..3, kept apart and off the boundary.
        std::vector<std::pair<Complex, int>> roots;
        while (roots.size() < 3) {
            const Complex z = gen.complex(1.6);
            bool ok = true;
            for (const auto& r : roots) ok = ok && std::abs(r.first - z) > 0.2;
            if (ok) roots.push_back({z, gen.integer(1, 3)});
        }
        Expr e = c(1.0);
        for (const auto& [z, m] : roots) e = e * Expr::pow(w() - c(z), m);
        const auto set = zeroScan(e, win);
        CHECK(set.poles.empty());
        int total = 0;
        for (const auto& [z, m] : roots) {
            CHECK(totalMultiplicityAt(set, z) == m);
            total += m;
        }
        CHECK(set.zeroCount() == total);
        CHECK(set.windowTotal == total);
    }
}

TEST_CASE("zero scan with poles") {
    const Expr e = (w() - c(0.5)) / Expr::pow(w() + c(0.5), 2);
    const auto set = zeroScan(e, ScanWindow{});
    REQUIRE(set.roots.size() == 1);
    REQUIRE(set.poles.size() == 1);
    CHECK(set.poles[0].multiplicity == 2);
    CHECK(std::abs(set.poles[0].location + 0.5) < 1e-8);
    CHECK(set.windowTotal == -1);
    CHECK_THROWS_AS(zeroScan(w() - w(), ScanWindow{}), AnalyzerFailure);
}

TEST_CASE("winding number") {
    const Expr e = Expr::pow(w(), 2) * (w() - c(3.0));
    CHECK(std::round(windingNumber(e, e.derivative(), 0.0, 0.5, 128)) == 2.0);
    CHECK(std::round(windingNumber(e, e.derivative(), 0.0, 4.0, 256)) == 3.0);
}

TEST_CASE("zero set relations") {
    auto make = [](std::vector<std::pair<Complex, int>> pts) {
        ZeroSet s;
        for (const auto& [z, m] : pts) s.roots.push_back({z, m, double(m)});
        return s;
    };
    const auto a = make({{0.0, 1}, {{0, 1}, 1}});
    const auto b = make({{0.0, 2}, {{0, 1}, 1}, {{1, 0}, 1}});
    CHECK(zeroSetCompare(a, b, Relation::Subset, MultiplicityMode::Counting).holds);
    CHECK(zeroSetCompare(a, b, Relation::StrictSubset, MultiplicityMode::Counting).holds);
    CHECK(zeroSetCompare(b, a, Relation::Superset, MultiplicityMode::Ignoring).holds);
    CHECK_FALSE(zeroSetCompare(b, a, Relation::Subset, MultiplicityMode::Ignoring).holds);
    const auto c2 = make({{0.0, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
    CHECK(zeroSetCompare(b, c2, Relation::Equal, MultiplicityMode::Ignoring).holds);
    const auto counting = zeroSetCompare(b, c2, Relation::Equal, MultiplicityMode::Counting);
    CHECK_FALSE(counting.holds);
    REQUIRE(counting.witnesses.size() == 1);
    CHECK(counting.witnesses[0] == Complex(0.0));
    CHECK(zeroSetCompare(ZeroSet{}, ZeroSet{}, Relation::Equal, MultiplicityMode::Counting).holds);
    CHECK((parseRelation("strict-subset") == Relation::StrictSubset));
    CHECK_THROWS_AS(parseMultiplicityMode("sometimes"), InvalidInput);
}

TEST_CASE("zero sets of the named families") {
    const auto r = families::buildFamily("exp-pair", families::FamilyParams{});
    const auto win = parseWindow("-1,1,-7,7");
    const auto zf = zeroScan(r.f.derivative(), win);
    const auto zg = zeroScan(r.g.derivative(), win);
    CHECK(zf.roots.empty());
    CHECK(zg.zeroCount() == 5);
    CHECK(totalMultiplicityAt(zg, {0.0, std::numbers::pi}) == 1);
    const auto strict = zeroSetCompare(zf, zg, Relation::StrictSubset, MultiplicityMode::Counting);
    CHECK(strict.holds);
    CHECK(strict.witnesses.size() == 5);

    const auto uu = families::buildUnitUnit();
    CHECK(zeroSetCompare(zeroScan(uu.f, ScanWindow{}), zeroScan(uu.g, ScanWindow{}), Relation::Equal,
                         MultiplicityMode::Ignoring)
              .holds);
    const auto c1 = families::buildCaseI(families::AlphaKind::Exp);
    const auto cmp =
        zeroSetCompare(zeroScan(c1.f, win), zeroScan(c1.g, win), Relation::Equal, MultiplicityMode::Ignoring);
    CHECK_FALSE(cmp.holds);
    CHECK_FALSE(cmp.witnesses.empty());
}

TEST_CASE("value attainment") {
    const auto rows = valueAttainmentScan(Expr::exp(w()), {1.0, Complex(0.0, 1.0), 0.0}, ScanWindow{});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].newtonConverged);
    CHECK(std::abs(rows[0].preimage) < 1e-10);
    CHECK(rows[1].newtonConverged);
    CHECK(std::abs(std::exp(rows[1].preimage) - Complex(0.0, 1.0)) < 1e-10);
    CHECK(rows[1].preimageInWindow);
    CHECK(rows[2].gridMinDistance > 0.1);  // exp omits 0
}

TEST_CASE("H1 and H2 leading coefficients") {
    for (const char* tau : {"0", "0.3+0.2i", "1"}) {
        CAPTURE(tau);
        const auto h1 = diagnoseTau(DiagnosticKind::H1, parseNumber(tau));
        REQUIRE(h1.limit.has_value());
        CHECK(std::abs(h1.limit->expected - 4.0) < 1e-14);
        CHECK(h1.limit->error < 1e-6);
        const auto h2 = diagnoseTau(DiagnosticKind::H2, parseNumber(tau));
        REQUIRE(h2.limit.has_value());
        CHECK(std::abs(h2.limit->expected - 4.0 * std::pow(4.0, 2.0 / 3.0)) < 1e-12);
        CHECK(h2.limit->error < 1e-6);
        REQUIRE(h1.cellMinimum.has_value());
        CHECK(h1.cellMinimum->zero.has_value());
    }
    CHECK((parseDiagnosticKind("H0") == DiagnosticKind::H0));
    const auto h0 = diagnoseH0(families::buildCaseII(0), parseWindow("-1,1,-1,1"));
    CHECK(h0.gridFinite > 0);
    CHECK_FALSE(h0.nearPoints.empty());
}

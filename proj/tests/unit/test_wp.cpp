#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fermatlab/errors.hpp"
#include "fermatlab/wp/invariants.hpp"
#include "fermatlab/wp/weierstrass.hpp"
#include "gen.hpp"

using namespace fermatlab;
using wp::Invariants;
using wp::Weierstrass;

namespace {

RationalComplex q(long n, long d = 1) { return RationalComplex::fraction(n, d); }

/// Random invariants kept away from the degenerate locus.
Invariants randomInvariants(testgen::Gen& gen) {
    for (;;) {
        const Complex g2 = gen.complex(4.0);
        const Complex g3 = gen.complex(4.0);
        const Complex delta = g2 * g2 * g2 - 27.0 * g3 * g3;
        if (std::abs(delta) > 1.0) return Invariants::approx(g2, g3);
    }
}

Complex randomCellPoint(testgen::Gen& gen, const Weierstrass& e, double clearance) {
    for (;;) {
        const Complex z = gen.real(0, 1) * 2.0 * e.halfPeriods().omega1 + gen.real(0, 1) * 2.0 * e.halfPeriods().omega3;
        if (std::abs(e.reduce(z)) > clearance) return z;
    }
}

}  // namespace

TEST_CASE("invariants") {
    CHECK_THROWS_AS(Invariants::exact(q(3), q(1)).requireNondegenerate(), DegenerateLattice);
    CHECK_THROWS_AS(Invariants::exact(q(0), q(0)).requireNondegenerate(), DegenerateLattice);
    CHECK_NOTHROW(Invariants::exact(q(0), q(1)).requireNondegenerate());
    const auto two = wp::invariantsFromCase(wp::parseCaseId("II"));
    CHECK(*two.exactG2 == q(0));
    CHECK(*two.exactG3 == q(1));
    const auto four = wp::invariantsFromCase(wp::parseCaseId("case4"));
    CHECK(*four.exactG2 == q(-1, 12));
    CHECK(*four.exactG3 == q(-1, 6));
    CHECK_THROWS_AS(wp::parseCaseId("VII"), InvalidInput);
}

TEST_CASE("invariants from tau") {
    const auto zero = wp::invariantsFromTau(0.0, q(0));
    REQUIRE(zero.isExact());
    CHECK(*zero.exactG2 == q(0));
    CHECK(*zero.exactG3 == q(432));
    CHECK_THROWS_AS(wp::invariantsFromTau(-1.0, q(-1)), DegenerateLattice);
    const Complex w = std::polar(1.0, std::numbers::pi / 3.0);  // w³ = −1
    CHECK_THROWS_AS(wp::invariantsFromTau(w), DegenerateLattice);
    const Complex tau(0.3, 0.2);
    const auto inv = wp::invariantsFromTau(tau);
    CHECK(std::abs(inv.g2 - (-27.0 * tau * std::cbrt(4.0) * (8.0 - tau * tau * tau))) < 1e-12);
    CHECK(std::abs(inv.g3 - (-54.0 * (std::pow(tau, 6) + 20.0 * tau * tau * tau - 8.0))) < 1e-12);
}

TEST_CASE("discriminant in tau: two forms agree exactly") {
    testgen::Gen gen(41);
    for (int k = 0; k < 40; ++k) {
        const auto tau = gen.gaussian(20, 9);
        const auto d = wp::discriminantOfTau(tau.toComplex(), tau);
        REQUIRE(d.exactDifference().has_value());
        CHECK(d.exactDifference()->isZero());
        CHECK(std::abs(d.difference()) <= 1e-9 * (1.0 + std::abs(d.factoredForm)));
    }
    const auto d0 = wp::discriminantOfTau(0.0, q(0));
    CHECK(*d0.exactBraceForm == q(-5038848));
    CHECK(*d0.exactFactoredForm == q(-5038848));
    CHECK(wp::discriminantOfTau(-1.0, q(-1)).exactFactoredForm->isZero());
    const auto approx = wp::discriminantOfTau(Complex(0.4, -0.7));
    CHECK_FALSE(approx.exactDifference().has_value());
    CHECK(std::abs(approx.difference()) <= 1e-9 * std::abs(approx.factoredForm));
}

TEST_CASE("lemniscatic half period") {
    // g₂ = 4, g₃ = 0: the real half period is Γ(1/4)²/(4√(2π)).
    const Weierstrass e(Invariants::exact(q(4), q(0)));
    const double expected = std::tgamma(0.25) * std::tgamma(0.25) / (4.0 * std::sqrt(2.0 * std::numbers::pi));
    CHECK(std::abs(e.halfPeriods().omega1) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(std::abs(e.halfPeriods().omega3) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(e.shortestPeriod() == doctest::Approx(2.0 * expected).epsilon(1e-12));
}

TEST_CASE("half periods land on the roots") {
    for (const auto& inv : {Invariants::exact(q(0), q(1)), Invariants::exact(q(-1, 12), q(-1, 6)),
                            Invariants::exact(q(0), q(432)), Invariants::approx({1.0, 2.0}, {-0.5, 0.25})}) {
        const Weierstrass e(inv);
        const auto h = e.halfPeriods();
        CHECK((h.omega3 / h.omega1).imag() > 0.0);
        for (const Complex half : {h.omega1, h.omega3, h.omega1 + h.omega3}) {
            const Complex v = e.evaluate(half).wp;
            double best = INFINITY;
            for (const Complex r : e.roots()) best = std::min(best, std::abs(v - r));
            CHECK(best < 1e-9 * (1.0 + std::abs(v)));
            CHECK(std::abs(4.0 * v * v * v - inv.g2 * v - inv.g3) < 1e-8 * (1.0 + std::abs(v * v * v)));
        }
    }
}

TEST_CASE("engine properties on random invariants") {
    testgen::Gen gen(42);
    for (int k = 0; k < 25; ++k) {
        const auto inv = randomInvariants(gen);
        const Weierstrass e(inv);
        const double clear = 0.1 * e.shortestPeriod();
        const Complex w1 = 2.0 * e.halfPeriods().omega1;
        const Complex w3 = 2.0 * e.halfPeriods().omega3;
        for (int j = 0; j < 8; ++j) {
            const Complex z = randomCellPoint(gen, e, clear);
            const Complex u = randomCellPoint(gen, e, clear);
            const auto v = e.evaluate(z);
            const double scale = 1.0 + std::pow(std::abs(v.wp), 3);
            // ODE, ℘″ relation, periodicity, parity
            CHECK(std::abs(v.wpPrime * v.wpPrime - 4.0 * v.wp * v.wp * v.wp + inv.g2 * v.wp + inv.g3) < 1e-8 * scale);
            CHECK(std::abs(v.wpPrimePrime - (6.0 * v.wp * v.wp - inv.g2 / 2.0)) < 1e-8 * scale);
            CHECK(testgen::relErr(e.evaluate(z + w1).wp, v.wp) < 1e-8);
            CHECK(testgen::relErr(e.evaluate(z - 3.0 * w3 + 2.0 * w1).wp, v.wp) < 1e-7);
            CHECK(testgen::relErr(e.evaluate(-z).wp, v.wp) < 1e-9);
            CHECK(testgen::relErr(e.evaluate(-z).wpPrime, -v.wpPrime) < 1e-9);
            // addition theorem, away from z ≡ ±u
            const auto vu = e.evaluate(u);
            if (std::abs(v.wp - vu.wp) > 0.5) {
                const Complex ratio = (v.wpPrime - vu.wpPrime) / (v.wp - vu.wp);
                const Complex sum = 0.25 * ratio * ratio - v.wp - vu.wp;
                const Complex direct = e.evaluate(z + u).wp;
                CHECK(std::abs(sum - direct) < 1e-7 * (1.0 + std::abs(ratio * ratio)));
            }
        }
    }
}

TEST_CASE("homogeneity under rescaling") {
    testgen::Gen gen(43);
    for (int k = 0; k < 10; ++k) {
        const auto inv = randomInvariants(gen);
        const Complex lambda = gen.complex(1.0) + Complex(1.2, 0.0);
        const auto scaled = Invariants::approx(inv.g2 / std::pow(lambda, 4), inv.g3 / std::pow(lambda, 6));
        const Weierstrass a(inv);
        const Weierstrass b(scaled);
        const Complex z = randomCellPoint(gen, a, 0.1 * a.shortestPeriod());
        CHECK(testgen::relErr(b.evaluate(lambda * z).wp, a.evaluate(z).wp / (lambda * lambda)) < 1e-8);
    }
}

TEST_CASE("near the origin wp behaves like its Laurent series") {
    const Weierstrass e(Invariants::exact(q(0), q(1)));
    for (const Complex z : {Complex(1e-3, 0), Complex(0, 2e-3), Complex(1e-4, 1e-4)}) {
        const Complex series = 1.0 / (z * z) + z * z * z * z / 28.0;
        CHECK(testgen::relErr(e.evaluate(z).wp, series) < 1e-14);
    }
    CHECK_THROWS_AS(e.evaluate(0.0), PoleProximity);
    CHECK_THROWS_AS(e.evaluate(2.0 * e.halfPeriods().omega1), PoleProximity);
}

TEST_CASE("batch evaluation matches pointwise") {
    testgen::Gen gen(44);
    const Weierstrass e(Invariants::exact(q(-1, 12), q(-1, 6)));
    std::vector<Complex> pts;
    for (int k = 0; k < 37; ++k) pts.push_back(randomCellPoint(gen, e, 0.05));
    const auto batch = e.evaluate(simd::ComplexArray(pts));
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const auto v = e.evaluate(pts[k]);
        CHECK(testgen::relErr(batch.wp.at(k), v.wp) < 1e-12);
        CHECK(testgen::relErr(batch.wpPrime.at(k), v.wpPrime) < 1e-12);
    }
}

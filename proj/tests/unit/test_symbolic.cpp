#include <doctest.h>

#include "fermatlab/errors.hpp"
#include "fermatlab/symbolic/laurent.hpp"
#include "fermatlab/symbolic/quotient.hpp"
#include "fermatlab/symbolic/wp_series.hpp"
#include "gen.hpp"

using namespace fermatlab;
using namespace fermatlab::symbolic;

namespace {

Polynomial randomPoly(testgen::Gen& gen, int maxDegree = 5) { return Polynomial(gen.coefficients(maxDegree)); }

RationalComplex q(long n, long d = 1) { return RationalComplex::fraction(n, d); }

}  // namespace

TEST_CASE("polynomial ring laws and evaluation homomorphism") {
    testgen::Gen gen(31);
    for (int k = 0; k < 100; ++k) {
        const auto a = randomPoly(gen);
        const auto b = randomPoly(gen);
        const auto c = randomPoly(gen);
        const auto x = gen.gaussian();
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - a).isZero());
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
        CHECK(a.pow(3) == a * a * a);
        if (!a.isZero() && !b.isZero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("polynomial text form") {
    const Polynomial p({q(1, 12), q(1, 36), q(0), q(-4), q(44, 3)});
    CHECK(p.toString("P") == "44/3*P^4 - 4*P^3 + 1/36*P + 1/12");
    CHECK(Polynomial().toString("P") == "0");
    CHECK(Polynomial({q(0), q(0)}).isZero());
    CHECK(Polynomial({q(0), q(0)}).degree() == -1);
    CHECK(canonicalSign(-p) == p);
    CHECK(canonicalSign(p) == p);
}

TEST_CASE("quotient ring reduces X^2 to the cubic") {
    const auto cubic = weierstrassCubic(q(0), q(1));
    CHECK(cubic == Polynomial({q(-1), q(0), q(0), q(4)}));
    const auto x = WpQuotientPoly::x(cubic);
    const auto sq = x * x;
    CHECK(sq.oddPart().isZero());
    CHECK(sq.evenPart() == cubic);
    const auto x3 = x.pow(3);
    CHECK(x3.evenPart().isZero());
    CHECK(x3.oddPart() == cubic);
}

TEST_CASE("quotient ring arithmetic agrees with evaluation on the curve") {
    testgen::Gen gen(32);
    const auto g2 = gen.gaussian(5, 3);
    const auto g3 = gen.gaussian(5, 3);
    const auto cubic = weierstrassCubic(g2, g3);
    for (int k = 0; k < 50; ++k) {
        const WpQuotientPoly a(randomPoly(gen, 3), randomPoly(gen, 3), cubic);
        const WpQuotientPoly b(randomPoly(gen, 3), randomPoly(gen, 3), cubic);
        const Complex p = gen.complex(1.5);
        const Complex x = std::sqrt(cubic.evaluate(p));
        const Complex lhs = (a * b - a + 3).evaluate(p, x);
        const Complex rhs = a.evaluate(p, x) * b.evaluate(p, x) - a.evaluate(p, x) + 3.0;
        CHECK(testgen::relErr(lhs, rhs) < 1e-9);
    }
}

TEST_CASE("Laurent series algebra") {
    testgen::Gen gen(33);
    const auto e = expSeries<RationalComplex>(20);
    CHECK(e.coefficient(5) == q(1, 120));
    CHECK((e.derivative() - e.truncated(20)).isZero());
    for (int k = 0; k < 30; ++k) {
        std::vector<RationalComplex> c = gen.coefficients(6);
        c[0] = gen.nonzeroGaussian();
        const auto s = ExactSeries::fromCoefficients(gen.integer(-3, 3), c, 12);
        const auto one = s * s.inverse();
        CHECK(one.coefficient(0) == q(1));
        for (int j = 1; j < one.precision(); ++j) CHECK(one.coefficient(j).isZero());
        CHECK((s.pow(2) - s * s).isZero());
    }
    const auto w = ExactSeries::monomial(q(1), 1, 30);
    const auto expW = expOfSeries(w);
    const auto expMinusW = expOfSeries(-w);
    const auto prod = expW * expMinusW;
    CHECK(prod.coefficient(0) == q(1));
    for (int j = 1; j < prod.precision(); ++j) CHECK(prod.coefficient(j).isZero());
    CHECK_THROWS_AS(expOfSeries(ExactSeries::constant(q(1), 5)), InvalidInput);
}

TEST_CASE("wp Laurent coefficients match the tabulated expansion") {
    // ℘ = z⁻² + g₂z²/20 + g₃z⁴/28 + g₂²z⁶/1200 + 3g₂g₃z⁸/6160 + ...
    testgen::Gen gen(34);
    for (int k = 0; k < 20; ++k) {
        const auto g2 = gen.gaussian(7, 4);
        const auto g3 = gen.gaussian(7, 4);
        const auto s = wpSeries<RationalComplex>(wp::Invariants::exact(g2, g3), 12);
        CHECK(s.coefficient(-2) == q(1));
        CHECK(s.coefficient(0).isZero());
        CHECK(s.coefficient(2) == g2 / q(20));
        CHECK(s.coefficient(4) == g3 / q(28));
        CHECK(s.coefficient(6) == g2 * g2 / q(1200));
        CHECK(s.coefficient(8) == q(3) * g2 * g3 / q(6160));
        CHECK(s.coefficient(3).isZero());
    }
    const auto eq = wpSeries<RationalComplex>(wp::Invariants::exact(q(0), q(1)), 12);
    CHECK(eq.coefficient(10) == q(1, 10192));
}

TEST_CASE("wp series satisfies the ODE and its derivative for random exact invariants") {
    testgen::Gen gen(35);
    for (int k = 0; k < 15; ++k) {
        const auto inv = wp::Invariants::exact(gen.gaussian(9, 5), gen.gaussian(9, 5));
        CHECK(odeResidualSeries<RationalComplex>(inv, 30).isZero());
        const auto p = wpSeries<RationalComplex>(inv, 30);
        const auto second = p.derivative().derivative();
        const auto rhs = q(6) * p * p - ExactSeries::constant(inv.exactG2.value() / q(2), p.precision());
        const auto diff = second - rhs;
        for (int j = diff.valuation(); j < 20; ++j) CHECK(diff.coefficient(j).isZero());
    }
}

TEST_CASE("wp of the identity series is the wp series") {
    const auto inv = wp::Invariants::exact(q(-1, 12), q(-1, 6));
    const auto w = ExactSeries::monomial(q(1), 1, 25);
    const auto a = wpOfSeries(inv, w);
    const auto b = wpSeries<RationalComplex>(inv, 22);
    for (int j = -2; j <= 20; ++j) CHECK(a.coefficient(j) == b.coefficient(j));
    const auto ap = wpPrimeOfSeries(inv, w);
    const auto bp = b.derivative();
    for (int j = -3; j <= 19; ++j) CHECK(ap.coefficient(j) == bp.coefficient(j));
    CHECK_THROWS_AS(wpOfSeries(inv, ExactSeries::constant(q(1), 10)), InvalidInput);
}

TEST_CASE("float and exact series agree") {
    const auto inv = wp::Invariants::exact(q(2), q(3, 7));
    const auto e = odeResidualSeries<RationalComplex>(inv, 24);
    const auto f = odeResidualSeries<Complex>(inv, 24);
    CHECK(e.isZero());
    CHECK(f.maxMagnitude() < 1e-12);
}

#include <doctest.h>

#include <cmath>

#include "fermatlab/errors.hpp"
#include "fermatlab/scalars.hpp"
#include "gen.hpp"

using namespace fermatlab;

TEST_CASE("rational complex field laws") {
    testgen::Gen gen(11);
    for (int k = 0; k < 300; ++k) {
        const auto a = gen.gaussian();
        const auto b = gen.nonzeroGaussian();
        const auto c = gen.gaussian();
        CHECK((a + b) - b == a);
        CHECK((a * b) / b == a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((b * b.conj()).re() == b.normSquared());
        CHECK(b.pow(3) == b * b * b);
        CHECK(b.pow(-2) * b * b == RationalComplex(1));
    }
}

TEST_CASE("toString round-trips through parseNumber") {
    testgen::Gen gen(12);
    for (int k = 0; k < 200; ++k) {
        const auto a = gen.gaussian(200, 60);
        const auto parsed = parseNumber(a.toString());
        REQUIRE(parsed.exact.has_value());
        CHECK(*parsed.exact == a);
        CHECK(std::abs(parsed.value - a.toComplex()) <= 1e-15 * (1.0 + std::abs(a.toComplex())));
    }
}

TEST_CASE("parseNumber literal forms") {
    CHECK(*parseNumber("5/4").exact == RationalComplex::fraction(5, 4));
    CHECK(*parseNumber("0.3+0.2i").exact ==
          RationalComplex::fraction(3, 10) + RationalComplex::fraction(1, 5) * RationalComplex::i());
    CHECK(*parseNumber("i").exact == RationalComplex::i());
    CHECK(*parseNumber("-i").exact == -RationalComplex::i());
    CHECK(*parseNumber("-2i").exact == RationalComplex(-2) * RationalComplex::i());
    CHECK(*parseNumber("2.5e-1").exact == RationalComplex::fraction(1, 4));
    CHECK(*parseNumber("-1").exact == RationalComplex(-1));
    CHECK(parseNumber("1/3").value.real() == doctest::Approx(1.0 / 3.0));
    for (const char* bad : {"", "abc", "1//2", "1/0", "1+", "1 + 2i", "i2"}) {
        CHECK_THROWS_AS(parseNumber(bad), InvalidInput);
    }
}

TEST_CASE("exactSqrt") {
    testgen::Gen gen(13);
    for (int k = 0; k < 100; ++k) {
        const auto a = gen.gaussian();
        const auto r = exactSqrt(a * a);
        REQUIRE(r.has_value());
        CHECK(*r * *r == a * a);
    }
    CHECK_FALSE(exactSqrt(RationalComplex(2)).has_value());
    CHECK_FALSE(exactSqrt(RationalComplex::i()).has_value());
    CHECK(*exactSqrt(RationalComplex(-4)) * *exactSqrt(RationalComplex(-4)) == RationalComplex(-4));
}

TEST_CASE("algebraic constants") {
    const auto& k = AlgebraicConstants::get();
    CHECK(std::abs(k.cbrt4 * k.cbrt4 * k.cbrt4 - 4.0) < 1e-14);
    CHECK(std::abs(k.sqrt3 * k.sqrt3 - 3.0) < 1e-14);
    for (const auto e : k.eta) CHECK(std::abs(e * e * e - 1.0) < 1e-14);
    for (int j = 0; j < 4; ++j) {
        CHECK(zetaExact(j).pow(4) == RationalComplex(1));
        CHECK(std::abs(zetaExact(j).toComplex() - k.zeta[j]) < 1e-15);
    }
}

TEST_CASE("cubicRoots satisfy the cubic") {
    testgen::Gen gen(14);
    for (int k = 0; k < 100; ++k) {
        const Complex a3 = gen.complex(3.0) + 0.5;
        const Complex a1 = gen.complex(3.0);
        const Complex a0 = gen.complex(3.0);
        for (const Complex t : cubicRoots(a3, a1, a0)) {
            CHECK(std::abs(a3 * t * t * t + a1 * t + a0) < 1e-10 * (1.0 + std::abs(a3) + std::abs(a1) + std::abs(a0)));
        }
    }
    // 4t³ − 1: the real root is 4^{-1/3}.
    bool found = false;
    for (const Complex t : cubicRoots(4.0, 0.0, -1.0)) found = found || std::abs(t - std::cbrt(0.25)) < 1e-14;
    CHECK(found);
    CHECK_THROWS_AS(cubicRoots(0.0, 1.0, 1.0), InvalidInput);
}

TEST_CASE("complex AGM") {
    // Gauss: AGM(1, √2) = 1.19814023473559220744...
    CHECK(std::abs(complexAGM(1.0, std::sqrt(2.0)) - 1.1981402347355922) < 1e-15);
    testgen::Gen gen(15);
    for (int k = 0; k < 50; ++k) {
        const Complex a = gen.complex(2.0) + 3.0;
        const Complex b = gen.complex(2.0) + 3.0;
        CHECK(std::abs(complexAGM(a, b) - complexAGM(b, a)) < 1e-13);
        CHECK(std::abs(complexAGM(2.0 * a, 2.0 * b) - 2.0 * complexAGM(a, b)) < 1e-12);
    }
}

#include <doctest.h>

#include <cstring>

#include "fermatlab/simd/kernels.hpp"
#include "gen.hpp"

using namespace fermatlab;
using namespace fermatlab::simd;

namespace {

ComplexArray randomArray(testgen::Gen& gen, std::size_t n, double radius) {
    ComplexArray a(n);
    for (std::size_t k = 0; k < n; ++k) a.set(k, gen.complex(radius));
    return a;
}

bool bitEqual(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() && (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

struct Outputs {
    ComplexArray add, sub, mul, div, scale, horner;
    std::vector<double> modulus;
};

Outputs runAll(const KernelTable& t, const ComplexArray& a, const ComplexArray& b, Complex s,
               const std::vector<Complex>& coef) {
    const std::size_t n = a.size();
    Outputs o{ComplexArray(n), ComplexArray(n), ComplexArray(n), ComplexArray(n), ComplexArray(n), ComplexArray(n),
              std::vector<double>(n)};
    t.add(a.re.data(), a.im.data(), b.re.data(), b.im.data(), o.add.re.data(), o.add.im.data(), n);
    t.sub(a.re.data(), a.im.data(), b.re.data(), b.im.data(), o.sub.re.data(), o.sub.im.data(), n);
    t.mul(a.re.data(), a.im.data(), b.re.data(), b.im.data(), o.mul.re.data(), o.mul.im.data(), n);
    t.div(a.re.data(), a.im.data(), b.re.data(), b.im.data(), o.div.re.data(), o.div.im.data(), n);
    t.scale(s.real(), s.imag(), a.re.data(), a.im.data(), o.scale.re.data(), o.scale.im.data(), n);
    std::vector<double> cr, ci;
    for (const Complex c : coef) {
        cr.push_back(c.real());
        ci.push_back(c.imag());
    }
    t.horner(cr.data(), ci.data(), coef.size(), a.re.data(), a.im.data(), o.horner.re.data(), o.horner.im.data(), n);
    t.modulus(a.re.data(), a.im.data(), o.modulus.data(), n);
    return o;
}

}  // namespace

TEST_CASE("scalar kernels agree with std::complex") {
    testgen::Gen gen(21);
    const auto& t = scalarKernels();
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 16u, 33u}) {
        const auto a = randomArray(gen, n, 5.0);
        const auto b = randomArray(gen, n, 5.0);
        const Complex s = gen.complex(2.0);
        const std::vector<Complex> coef{gen.complex(1.0), gen.complex(1.0), gen.complex(1.0), gen.complex(1.0)};
        const auto o = runAll(t, a, b, s, coef);
        for (std::size_t k = 0; k < n; ++k) {
            const Complex x = a.at(k), y = b.at(k);
            CHECK(o.add.at(k) == x + y);
            CHECK(o.sub.at(k) == x - y);
            CHECK(std::abs(o.mul.at(k) - x * y) <= 1e-14 * std::abs(x * y));
            CHECK(std::abs(o.div.at(k) - x / y) <= 1e-14 * std::abs(x / y));
            CHECK(std::abs(o.scale.at(k) - s * x) <= 1e-14 * std::abs(s * x));
            Complex h = coef.back();
            for (int j = static_cast<int>(coef.size()) - 2; j >= 0; --j) h = h * x + coef[static_cast<std::size_t>(j)];
            CHECK(std::abs(o.horner.at(k) - h) <= 1e-13 * (1.0 + std::abs(h)));
            CHECK(o.modulus[k] == doctest::Approx(std::abs(x)).epsilon(1e-15));
        }
    }
}

TEST_CASE("AVX2 kernels are bit-identical to the scalar reference") {
    const KernelTable* avx = avx2Kernels();
    if (avx == nullptr || !cpuSupports(Isa::Avx2)) {
        MESSAGE("AVX2 variant unavailable on this machine; skipped");
        return;
    }
    testgen::Gen gen(22);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(gen.integer(0, 70));  // exercises the tails
        const auto a = randomArray(gen, n, trial % 2 == 0 ? 3.0 : 1e3);
        auto b = randomArray(gen, n, 3.0);
        if (n > 0 && trial % 7 == 0) b.set(0, 0.0);  // division by zero yields the same non-finite bits
        const Complex s = gen.complex(2.0);
        std::vector<Complex> coef;
        for (int j = 0, m = gen.integer(1, 12); j < m; ++j) coef.push_back(gen.complex(1.0));
        const auto ref = runAll(scalarKernels(), a, b, s, coef);
        const auto vec = runAll(*avx, a, b, s, coef);
        CHECK(bitEqual(ref.add.re, vec.add.re));
        CHECK(bitEqual(ref.add.im, vec.add.im));
        CHECK(bitEqual(ref.sub.re, vec.sub.re));
        CHECK(bitEqual(ref.sub.im, vec.sub.im));
        CHECK(bitEqual(ref.mul.re, vec.mul.re));
        CHECK(bitEqual(ref.mul.im, vec.mul.im));
        CHECK(bitEqual(ref.div.re, vec.div.re));
        CHECK(bitEqual(ref.div.im, vec.div.im));
        CHECK(bitEqual(ref.scale.re, vec.scale.re));
        CHECK(bitEqual(ref.scale.im, vec.scale.im));
        CHECK(bitEqual(ref.horner.re, vec.horner.re));
        CHECK(bitEqual(ref.horner.im, vec.horner.im));
        CHECK(bitEqual(ref.modulus, vec.modulus));
    }
}

TEST_CASE("dispatch wrappers") {
    testgen::Gen gen(23);
    const auto a = randomArray(gen, 19, 2.0);
    const auto b = randomArray(gen, 19, 2.0);
    const auto sum = add(a, b);
    const auto prod = mul(a, b);
    const auto quot = div(prod, b);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(sum.at(k) == a.at(k) + b.at(k));
        CHECK(std::abs(quot.at(k) - a.at(k)) < 1e-13);
    }
    const std::vector<Complex> one{1.0};
    const auto h = horner(one, a);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(h.at(k) == Complex(1.0));
    CHECK(modulus(ComplexArray(3, Complex(3.0, 4.0)))[2] == 5.0);
    INFO("selected kernels: " << kernels().name);
    CHECK(kernels().name != nullptr);
}

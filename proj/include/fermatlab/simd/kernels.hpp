#pragma once

// Batched complex arithmetic on structure-of-arrays buffers.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant selected at runtime. The vector variants perform the same IEEE
// operations in the same order as the reference (no FMA contraction), so the
// two are bit-identical; tests/unit/test_kernels.cpp holds them to that.

#include <cstddef>
#include <span>
#include <vector>

#include "fermatlab/scalars.hpp"

namespace fermatlab::simd {

/// Structure-of-arrays complex vector.
struct ComplexArray {
    std::vector<double> re;
    std::vector<double> im;

    ComplexArray() = default;
    explicit ComplexArray(std::size_t n, Complex fill = {}) : re(n, fill.real()), im(n, fill.imag()) {}
    explicit ComplexArray(std::span<const Complex> values);

    std::size_t size() const { return re.size(); }
    Complex at(std::size_t k) const { return {re[k], im[k]}; }
    void set(std::size_t k, Complex z) {
        re[k] = z.real();
        im[k] = z.imag();
    }
};

enum class Isa { Scalar, Avx2 };

using BinaryKernel = void (*)(const double* ar, const double* ai, const double* br, const double* bi,
                              double* cr, double* ci, std::size_t n);

struct KernelTable {
    Isa isa;
    const char* name;
    BinaryKernel add;
    BinaryKernel sub;
    BinaryKernel mul;
    /// Naive quotient (ac+bd, bc−ad)/(c²+d²); magnitudes in this code stay far from overflow.
    BinaryKernel div;
    /// c = s·a for a complex scalar s.
    void (*scale)(double sr, double si, const double* ar, const double* ai, double* cr, double* ci, std::size_t n);
    /// out = Σ_j coef[j]·t^j (Horner, coefficients ascending, count ≥ 1).
    void (*horner)(const double* coef_re, const double* coef_im, std::size_t count, const double* tr,
                   const double* ti, double* outr, double* outi, std::size_t n);
    /// out = sqrt(re² + im²)
    void (*modulus)(const double* ar, const double* ai, double* out, std::size_t n);
};

const KernelTable& scalarKernels();

/// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2Kernels();

bool cpuSupports(Isa isa);

/// Best kernel set for this CPU, chosen once. FERMATLAB_ISA=scalar forces the reference path.
const KernelTable& kernels();

ComplexArray add(const ComplexArray& a, const ComplexArray& b);
ComplexArray sub(const ComplexArray& a, const ComplexArray& b);
ComplexArray mul(const ComplexArray& a, const ComplexArray& b);
ComplexArray div(const ComplexArray& a, const ComplexArray& b);
ComplexArray scale(Complex s, const ComplexArray& a);
ComplexArray horner(std::span<const Complex> coefficients, const ComplexArray& t);
std::vector<double> modulus(const ComplexArray& a);

}  // namespace fermatlab::simd

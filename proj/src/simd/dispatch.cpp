#include <cstdlib>
#include <cstring>

#include "fermatlab/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace fermatlab::simd {

ComplexArray::ComplexArray(std::span<const Complex> values) : re(values.size()), im(values.size()) {
    for (std::size_t k = 0; k < values.size(); ++k) set(k, values[k]);
}

const KernelTable& scalarKernels() {
    static const KernelTable table{Isa::Scalar,        "scalar",           detail::addScalar,
                                   detail::subScalar,  detail::mulScalar,  detail::divScalar,
                                   detail::scaleScalar, detail::hornerScalar, detail::modulusScalar};
    return table;
}

const KernelTable* avx2Kernels() {
#if defined(FERMATLAB_HAVE_AVX2)
    static const KernelTable table{Isa::Avx2,        "avx2",           detail::addAvx2,
                                   detail::subAvx2,  detail::mulAvx2,  detail::divAvx2,
                                   detail::scaleAvx2, detail::hornerAvx2, detail::modulusAvx2};
    return &table;
#else
    return nullptr;
#endif
}

bool cpuSupports(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(FERMATLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& kernels() {
    static const KernelTable& chosen = []() -> const KernelTable& {
        const char* forced = std::getenv("FERMATLAB_ISA");
        if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalarKernels();
        if (cpuSupports(Isa::Avx2) && avx2Kernels() != nullptr) return *avx2Kernels();
        return scalarKernels();
    }();
    return chosen;
}

namespace {

ComplexArray binary(BinaryKernel kernel, const ComplexArray& a, const ComplexArray& b) {
    ComplexArray c(a.size());
    kernel(a.re.data(), a.im.data(), b.re.data(), b.im.data(), c.re.data(), c.im.data(), a.size());
    return c;
}

}  // namespace

ComplexArray add(const ComplexArray& a, const ComplexArray& b) { return binary(kernels().add, a, b); }
ComplexArray sub(const ComplexArray& a, const ComplexArray& b) { return binary(kernels().sub, a, b); }
ComplexArray mul(const ComplexArray& a, const ComplexArray& b) { return binary(kernels().mul, a, b); }
ComplexArray div(const ComplexArray& a, const ComplexArray& b) { return binary(kernels().div, a, b); }

ComplexArray scale(Complex s, const ComplexArray& a) {
    ComplexArray c(a.size());
    kernels().scale(s.real(), s.imag(), a.re.data(), a.im.data(), c.re.data(), c.im.data(), a.size());
    return c;
}

ComplexArray horner(std::span<const Complex> coefficients, const ComplexArray& t) {
    ComplexArray out(t.size());
    if (coefficients.empty()) return out;
    std::vector<double> cr(coefficients.size());
    std::vector<double> ci(coefficients.size());
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        cr[j] = coefficients[j].real();
        ci[j] = coefficients[j].imag();
    }
    kernels().horner(cr.data(), ci.data(), cr.size(), t.re.data(), t.im.data(), out.re.data(), out.im.data(),
                     t.size());
    return out;
}

std::vector<double> modulus(const ComplexArray& a) {
    std::vector<double> out(a.size());
    kernels().modulus(a.re.data(), a.im.data(), out.data(), a.size());
    return out;
}

}  // namespace fermatlab::simd

#include <cmath>

#include "fermatlab/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace fermatlab::simd::detail {

void addScalar(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
               std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        cr[k] = ar[k] + br[k];
        ci[k] = ai[k] + bi[k];
    }
}

void subScalar(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
               std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        cr[k] = ar[k] - br[k];
        ci[k] = ai[k] - bi[k];
    }
}

void mulScalar(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
               std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double re = ar[k] * br[k] - ai[k] * bi[k];
        const double im = ar[k] * bi[k] + ai[k] * br[k];
        cr[k] = re;
        ci[k] = im;
    }
}

void divScalar(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
               std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double den = br[k] * br[k] + bi[k] * bi[k];
        const double re = (ar[k] * br[k] + ai[k] * bi[k]) / den;
        const double im = (ai[k] * br[k] - ar[k] * bi[k]) / den;
        cr[k] = re;
        ci[k] = im;
    }
}

void scaleScalar(double sr, double si, const double* ar, const double* ai, double* cr, double* ci, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double re = sr * ar[k] - si * ai[k];
        const double im = sr * ai[k] + si * ar[k];
        cr[k] = re;
        ci[k] = im;
    }
}

void hornerScalar(const double* coef_re, const double* coef_im, std::size_t count, const double* tr,
                  const double* ti, double* outr, double* outi, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        double accr = coef_re[count - 1];
        double acci = coef_im[count - 1];
        for (std::size_t j = count - 1; j-- > 0;) {
            const double re = (accr * tr[k] - acci * ti[k]) + coef_re[j];
            const double im = (accr * ti[k] + acci * tr[k]) + coef_im[j];
            accr = re;
            acci = im;
        }
        outr[k] = accr;
        outi[k] = acci;
    }
}

void modulusScalar(const double* ar, const double* ai, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) out[k] = std::sqrt(ar[k] * ar[k] + ai[k] * ai[k]);
}

}  // namespace fermatlab::simd::detail

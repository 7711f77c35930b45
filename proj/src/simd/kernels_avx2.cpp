// Compiled with -mavx2 -mno-fma. Only reached after a runtime CPU check.

#include "kernels_impl.hpp"

#if defined(FERMATLAB_HAVE_AVX2)

#include <immintrin.h>

namespace fermatlab::simd::detail {

namespace {
constexpr std::size_t kLanes = 4;
}

void addAvx2(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
             std::size_t n) {
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        _mm256_storeu_pd(cr + k, _mm256_add_pd(_mm256_loadu_pd(ar + k), _mm256_loadu_pd(br + k)));
        _mm256_storeu_pd(ci + k, _mm256_add_pd(_mm256_loadu_pd(ai + k), _mm256_loadu_pd(bi + k)));
    }
    addScalar(ar + k, ai + k, br + k, bi + k, cr + k, ci + k, n - k);
}

void subAvx2(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
             std::size_t n) {
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        _mm256_storeu_pd(cr + k, _mm256_sub_pd(_mm256_loadu_pd(ar + k), _mm256_loadu_pd(br + k)));
        _mm256_storeu_pd(ci + k, _mm256_sub_pd(_mm256_loadu_pd(ai + k), _mm256_loadu_pd(bi + k)));
    }
    subScalar(ar + k, ai + k, br + k, bi + k, cr + k, ci + k, n - k);
}

void mulAvx2(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
             std::size_t n) {
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d a_re = _mm256_loadu_pd(ar + k);
        const __m256d a_im = _mm256_loadu_pd(ai + k);
        const __m256d b_re = _mm256_loadu_pd(br + k);
        const __m256d b_im = _mm256_loadu_pd(bi + k);
        const __m256d re = _mm256_sub_pd(_mm256_mul_pd(a_re, b_re), _mm256_mul_pd(a_im, b_im));
        const __m256d im = _mm256_add_pd(_mm256_mul_pd(a_re, b_im), _mm256_mul_pd(a_im, b_re));
        _mm256_storeu_pd(cr + k, re);
        _mm256_storeu_pd(ci + k, im);
    }
    mulScalar(ar + k, ai + k, br + k, bi + k, cr + k, ci + k, n - k);
}

void divAvx2(const double* ar, const double* ai, const double* br, const double* bi, double* cr, double* ci,
             std::size_t n) {
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d a_re = _mm256_loadu_pd(ar + k);
        const __m256d a_im = _mm256_loadu_pd(ai + k);
        const __m256d b_re = _mm256_loadu_pd(br + k);
        const __m256d b_im = _mm256_loadu_pd(bi + k);
        const __m256d den = _mm256_add_pd(_mm256_mul_pd(b_re, b_re), _mm256_mul_pd(b_im, b_im));
        const __m256d re =
            _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(a_re, b_re), _mm256_mul_pd(a_im, b_im)), den);
        const __m256d im =
            _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(a_im, b_re), _mm256_mul_pd(a_re, b_im)), den);
        _mm256_storeu_pd(cr + k, re);
        _mm256_storeu_pd(ci + k, im);
    }
    divScalar(ar + k, ai + k, br + k, bi + k, cr + k, ci + k, n - k);
}

void scaleAvx2(double sr, double si, const double* ar, const double* ai, double* cr, double* ci, std::size_t n) {
    const __m256d s_re = _mm256_set1_pd(sr);
    const __m256d s_im = _mm256_set1_pd(si);
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d a_re = _mm256_loadu_pd(ar + k);
        const __m256d a_im = _mm256_loadu_pd(ai + k);
        const __m256d re = _mm256_sub_pd(_mm256_mul_pd(s_re, a_re), _mm256_mul_pd(s_im, a_im));
        const __m256d im = _mm256_add_pd(_mm256_mul_pd(s_re, a_im), _mm256_mul_pd(s_im, a_re));
        _mm256_storeu_pd(cr + k, re);
        _mm256_storeu_pd(ci + k, im);
    }
    scaleScalar(sr, si, ar + k, ai + k, cr + k, ci + k, n - k);
}

void hornerAvx2(const double* coef_re, const double* coef_im, std::size_t count, const double* tr,
                const double* ti, double* outr, double* outi, std::size_t n) {
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d t_re = _mm256_loadu_pd(tr + k);
        const __m256d t_im = _mm256_loadu_pd(ti + k);
        __m256d acc_re = _mm256_set1_pd(coef_re[count - 1]);
        __m256d acc_im = _mm256_set1_pd(coef_im[count - 1]);
        for (std::size_t j = count - 1; j-- > 0;) {
            const __m256d re = _mm256_add_pd(
                _mm256_sub_pd(_mm256_mul_pd(acc_re, t_re), _mm256_mul_pd(acc_im, t_im)), _mm256_set1_pd(coef_re[j]));
            const __m256d im = _mm256_add_pd(
                _mm256_add_pd(_mm256_mul_pd(acc_re, t_im), _mm256_mul_pd(acc_im, t_re)), _mm256_set1_pd(coef_im[j]));
            acc_re = re;
            acc_im = im;
        }
        _mm256_storeu_pd(outr + k, acc_re);
        _mm256_storeu_pd(outi + k, acc_im);
    }
    hornerScalar(coef_re, coef_im, count, tr + k, ti + k, outr + k, outi + k, n - k);
}

void modulusAvx2(const double* ar, const double* ai, double* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + kLanes <= n; k += kLanes) {
        const __m256d re = _mm256_loadu_pd(ar + k);
        const __m256d im = _mm256_loadu_pd(ai + k);
        _mm256_storeu_pd(out + k, _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im))));
    }
    modulusScalar(ar + k, ai + k, out + k, n - k);
}

}  // namespace fermatlab::simd::detail

#endif

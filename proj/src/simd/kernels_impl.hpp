#pragma once

#include <cstddef>

namespace fermatlab::simd::detail {

void addScalar(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void subScalar(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void mulScalar(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void divScalar(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void scaleScalar(double, double, const double*, const double*, double*, double*, std::size_t);
void hornerScalar(const double*, const double*, std::size_t, const double*, const double*, double*, double*,
                  std::size_t);
void modulusScalar(const double*, const double*, double*, std::size_t);

#if defined(FERMATLAB_HAVE_AVX2)
void addAvx2(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void subAvx2(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void mulAvx2(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void divAvx2(const double*, const double*, const double*, const double*, double*, double*, std::size_t);
void scaleAvx2(double, double, const double*, const double*, double*, double*, std::size_t);
void hornerAvx2(const double*, const double*, std::size_t, const double*, const double*, double*, double*,
                std::size_t);
void modulusAvx2(const double*, const double*, double*, std::size_t);
#endif

}  // namespace fermatlab::simd::detail

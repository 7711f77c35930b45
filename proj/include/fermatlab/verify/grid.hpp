#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fermatlab/scalars.hpp"
#include "fermatlab/simd/kernels.hpp"
#include "fermatlab/wp/weierstrass.hpp"

namespace fermatlab::verify {

/// Axis-parallel sampling rectangle.
struct ScanWindow {
    double reMin = -2.0;
    double reMax = 2.0;
    double imMin = -2.0;
    double imMax = 2.0;
    /// Points per unit length along each axis.
    double density = 20.0;
    double softExclusionRadius = 0.05;

    /// Throws InvalidInput for an empty rectangle, density < 4 or a negative radius.
    void validate() const;
    std::size_t columns() const;  // along Re
    std::size_t rows() const;     // along Im
    std::size_t size() const { return columns() * rows(); }
    /// Grid in lexicographic (Re, Im) order, endpoints included.
    simd::ComplexArray points() const;
    bool contains(Complex z, double slack = 0.0) const;
    /// "reMin,reMax,imMin,imMax".
    std::string describe() const;
};

/// Parses "reMin,reMax,imMin,imMax".
ScanWindow parseWindow(std::string_view text);

/// s·2ω₁ + t·2ω₃ for s, t on a (perSide × perSide) grid over [0, 1).
simd::ComplexArray fundamentalCellGrid(const wp::Weierstrass& engine, std::size_t perSide);

}  // namespace fermatlab::verify

#include "fermatlab/verify/grid.hpp"

#include <cmath>
#include <sstream>

#include "fermatlab/errors.hpp"

namespace fermatlab::verify {

namespace {

std::size_t samples(double length, double density) {
    return static_cast<std::size_t>(std::llround(length * density)) + 1;
}

double coordinate(double lo, double hi, std::size_t k, std::size_t count) {
    if (count == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
}

}  // namespace

void ScanWindow::validate() const {
    if (!(reMax > reMin) || !(imMax > imMin)) throw InvalidInput("scan window must be a nondegenerate rectangle");
    if (!(density >= 4.0)) throw InvalidInput("grid density must be at least 4 points per unit length");
    if (!(softExclusionRadius >= 0.0)) throw InvalidInput("soft exclusion radius must be nonnegative");
}

std::size_t ScanWindow::columns() const { return samples(reMax - reMin, density); }
std::size_t ScanWindow::rows() const { return samples(imMax - imMin, density); }

simd::ComplexArray ScanWindow::points() const {
    validate();
    const std::size_t nx = columns();
    const std::size_t ny = rows();
    simd::ComplexArray out(nx * ny);
    std::size_t k = 0;
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = coordinate(reMin, reMax, i, nx);
        for (std::size_t j = 0; j < ny; ++j) out.set(k++, {x, coordinate(imMin, imMax, j, ny)});
    }
    return out;
}

bool ScanWindow::contains(Complex z, double slack) const {
    return z.real() >= reMin - slack && z.real() <= reMax + slack && z.imag() >= imMin - slack &&
           z.imag() <= imMax + slack;
}

std::string ScanWindow::describe() const {
    std::ostringstream out;
    out.precision(17);
    out << reMin << "," << reMax << "," << imMin << "," << imMax;
    return out.str();
}

ScanWindow parseWindow(std::string_view text) {
    ScanWindow w;
    double* fields[] = {&w.reMin, &w.reMax, &w.imMin, &w.imMax};
    std::size_t start = 0;
    for (int k = 0; k < 4; ++k) {
        const std::size_t comma = text.find(',', start);
        if ((k < 3) != (comma != std::string_view::npos)) {
            throw InvalidInput("window must be reMin,reMax,imMin,imMax");
        }
        const std::string part(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        try {
            std::size_t used = 0;
            *fields[k] = std::stod(part, &used);
            if (used != part.size()) throw InvalidInput("trailing text");
        } catch (const std::exception&) {
            throw InvalidInput("bad window coordinate '" + part + "'");
        }
        start = comma + 1;
    }
    w.validate();
    return w;
}

simd::ComplexArray fundamentalCellGrid(const wp::Weierstrass& engine, std::size_t perSide) {
    const Complex a = 2.0 * engine.halfPeriods().omega1;
    const Complex b = 2.0 * engine.halfPeriods().omega3;
    simd::ComplexArray out(perSide * perSide);
    std::size_t k = 0;
    for (std::size_t i = 0; i < perSide; ++i) {
        const double s = static_cast<double>(i) / static_cast<double>(perSide);
        for (std::size_t j = 0; j < perSide; ++j) {
            const double t = static_cast<double>(j) / static_cast<double>(perSide);
            out.set(k++, s * a + t * b);
        }
    }
    return out;
}

}  // namespace fermatlab::verify

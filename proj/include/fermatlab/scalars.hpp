#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

namespace fermatlab {

using Complex = std::complex<double>;
using Rational = mpq_class;

/// Exact element of Q(i). Both parts are kept in canonical (reduced) form.
class RationalComplex {
public:
    RationalComplex() = default;
    RationalComplex(long value) : re_(value), im_(0) {}  // NOLINT(implicit)
    RationalComplex(Rational re, Rational im = Rational(0));

    /// num/den as an exact real value; den must be nonzero.
    static RationalComplex fraction(long num, long den);
    static RationalComplex i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool isReal() const { return sgn(im_) == 0; }
    RationalComplex conj() const { return {re_, -im_}; }
    Rational normSquared() const { return re_ * re_ + im_ * im_; }
    Complex toComplex() const { return {re_.get_d(), im_.get_d()}; }
    RationalComplex pow(int exponent) const;

    /// "p/q", "a+bi" style text; round-trips through parseNumber().
    std::string toString() const;

    RationalComplex& operator+=(const RationalComplex& o);
    RationalComplex& operator-=(const RationalComplex& o);
    RationalComplex& operator*=(const RationalComplex& o);
    RationalComplex& operator/=(const RationalComplex& o);

    friend RationalComplex operator+(RationalComplex a, const RationalComplex& b) { return a += b; }
    friend RationalComplex operator-(RationalComplex a, const RationalComplex& b) { return a -= b; }
    friend RationalComplex operator*(RationalComplex a, const RationalComplex& b) { return a *= b; }
    friend RationalComplex operator/(RationalComplex a, const RationalComplex& b) { return a /= b; }
    friend RationalComplex operator-(const RationalComplex& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Exact square root in Q(i) when one exists.
std::optional<RationalComplex> exactSqrt(const RationalComplex& value);

/// Principal roots and roots of unity used by the explicit solution families.
struct AlgebraicConstants {
    Complex cbrt4;                // 4^(1/3), real
    Complex sqrt3;
    Complex i;
    std::array<Complex, 3> eta;   // exp(2πik/3)
    std::array<Complex, 4> zeta;  // i^k

    static const AlgebraicConstants& get();
};

/// Exact fourth root of unity i^k.
RationalComplex zetaExact(int index);

/// All roots of a3·t³ + a1·t + a0, sorted by (re, im). Throws InvalidInput if a3 == 0.
std::array<Complex, 3> cubicRoots(Complex a3, Complex a1, Complex a0);

/// Arithmetic–geometric mean with the "right choice" square-root branch at every step.
Complex complexAGM(Complex a, Complex b);

/// A number given on the command line or in a config file. Decimal and p/q
/// literals are exact; `exact` is empty only for non-representable inputs.
struct ParsedNumber {
    Complex value;
    std::optional<RationalComplex> exact;
};

/// Parses "a", "p/q", "a+bi", "a-bi", "bi", "i", "-i" (no spaces; exponents allowed).
ParsedNumber parseNumber(std::string_view text);

bool isFinite(Complex z);

}  // namespace fermatlab

#pragma once

#include <string>

#include "fermatlab/symbolic/polynomial.hpp"

namespace fermatlab::symbolic {

/// Element even(P) + X·odd(P) of Q(i)[P, X] / (X² − cubic(P)).
///
/// P stands for ℘ (or a rescaled ℘), X for ℘′, and cubic is the right-hand
/// side of the Weierstrass equation. Products reduce X² eagerly, so every
/// value is kept in reduced form.
class WpQuotientPoly {
public:
    WpQuotientPoly() = default;
    WpQuotientPoly(Polynomial even, Polynomial odd, Polynomial cubic);

    static WpQuotientPoly constant(const RationalComplex& c, const Polynomial& cubic);
    static WpQuotientPoly p(const Polynomial& cubic);
    static WpQuotientPoly x(const Polynomial& cubic);

    const Polynomial& evenPart() const { return even_; }
    const Polynomial& oddPart() const { return odd_; }
    const Polynomial& odeCubic() const { return cubic_; }

    /// Value at a point (P, X); callers choose X with X² = cubic(P) or not.
    Complex evaluate(Complex p, Complex x) const;

    WpQuotientPoly pow(int exponent) const;

    friend WpQuotientPoly operator+(const WpQuotientPoly& a, const WpQuotientPoly& b);
    friend WpQuotientPoly operator-(const WpQuotientPoly& a, const WpQuotientPoly& b);
    friend WpQuotientPoly operator-(const WpQuotientPoly& a);
    friend WpQuotientPoly operator*(const WpQuotientPoly& a, const WpQuotientPoly& b);
    friend WpQuotientPoly operator*(const RationalComplex& s, const WpQuotientPoly& a);
    friend WpQuotientPoly operator+(const WpQuotientPoly& a, const RationalComplex& c);
    friend WpQuotientPoly operator-(const WpQuotientPoly& a, const RationalComplex& c);

private:
    Polynomial even_;
    Polynomial odd_;
    Polynomial cubic_;
};

/// 4P³ − g₂P − g₃.
Polynomial weierstrassCubic(const RationalComplex& g2, const RationalComplex& g3);

struct QuotientVerdict {
    bool zero = false;
    Polynomial even;
    Polynomial odd;
};

/// ZERO iff both parts vanish; otherwise both residual parts are returned verbatim.
QuotientVerdict quotientAdjudicate(const WpQuotientPoly& value);

/// ±value, signed so the leading coefficient has positive real part (positive
/// imaginary part when the real part is zero). A cleared residual is only
/// defined up to the sign of the denominator that was cleared.
Polynomial canonicalSign(const Polynomial& value);

}  // namespace fermatlab::symbolic

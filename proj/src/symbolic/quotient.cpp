#include "fermatlab/symbolic/quotient.hpp"

#include "fermatlab/errors.hpp"

namespace fermatlab::symbolic {

WpQuotientPoly::WpQuotientPoly(Polynomial even, Polynomial odd, Polynomial cubic)
    : even_(std::move(even)), odd_(std::move(odd)), cubic_(std::move(cubic)) {}

WpQuotientPoly WpQuotientPoly::constant(const RationalComplex& c, const Polynomial& cubic) {
    return {Polynomial::constant(c), Polynomial(), cubic};
}

WpQuotientPoly WpQuotientPoly::p(const Polynomial& cubic) { return {Polynomial::variable(), Polynomial(), cubic}; }

WpQuotientPoly WpQuotientPoly::x(const Polynomial& cubic) {
    return {Polynomial(), Polynomial::constant(RationalComplex(1)), cubic};
}

Complex WpQuotientPoly::evaluate(Complex p, Complex x) const { return even_.evaluate(p) + x * odd_.evaluate(p); }

WpQuotientPoly operator+(const WpQuotientPoly& a, const WpQuotientPoly& b) {
    return {a.even_ + b.even_, a.odd_ + b.odd_, a.cubic_.isZero() ? b.cubic_ : a.cubic_};
}

WpQuotientPoly operator-(const WpQuotientPoly& a, const WpQuotientPoly& b) {
    return {a.even_ - b.even_, a.odd_ - b.odd_, a.cubic_.isZero() ? b.cubic_ : a.cubic_};
}

WpQuotientPoly operator-(const WpQuotientPoly& a) { return {-a.even_, -a.odd_, a.cubic_}; }

WpQuotientPoly operator*(const WpQuotientPoly& a, const WpQuotientPoly& b) {
    const Polynomial& cubic = a.cubic_.isZero() ? b.cubic_ : a.cubic_;
    // (e₁ + X o₁)(e₂ + X o₂) = e₁e₂ + X²·o₁o₂ + X(e₁o₂ + o₁e₂), X² → cubic.
    Polynomial odd_product = a.odd_ * b.odd_;
    if (!odd_product.isZero() && cubic.isZero()) {
        throw InvalidInput("X² appeared in a quotient ring without a Weierstrass cubic");
    }
    return {a.even_ * b.even_ + cubic * odd_product, a.even_ * b.odd_ + a.odd_ * b.even_, cubic};
}

WpQuotientPoly operator*(const RationalComplex& s, const WpQuotientPoly& a) {
    return {s * a.even_, s * a.odd_, a.cubic_};
}

WpQuotientPoly operator+(const WpQuotientPoly& a, const RationalComplex& c) {
    return {a.even_ + Polynomial::constant(c), a.odd_, a.cubic_};
}

WpQuotientPoly operator-(const WpQuotientPoly& a, const RationalComplex& c) {
    return {a.even_ - Polynomial::constant(c), a.odd_, a.cubic_};
}

WpQuotientPoly WpQuotientPoly::pow(int exponent) const {
    if (exponent < 0) throw InvalidInput("negative power in the quotient ring");
    WpQuotientPoly result = constant(RationalComplex(1), cubic_);
    WpQuotientPoly base = *this;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

Polynomial weierstrassCubic(const RationalComplex& g2, const RationalComplex& g3) {
    return Polynomial({-g3, -g2, RationalComplex(0), RationalComplex(4)});
}

QuotientVerdict quotientAdjudicate(const WpQuotientPoly& value) {
    QuotientVerdict verdict;
    verdict.zero = value.evenPart().isZero() && value.oddPart().isZero();
    verdict.even = value.evenPart();
    verdict.odd = value.oddPart();
    return verdict;
}

Polynomial canonicalSign(const Polynomial& value) {
    if (value.isZero()) return value;
    const RationalComplex lead = value.leadingCoefficient();
    const int sign = sgn(lead.re()) != 0 ? sgn(lead.re()) : sgn(lead.im());
    return sign < 0 ? -value : value;
}

}  // namespace fermatlab::symbolic

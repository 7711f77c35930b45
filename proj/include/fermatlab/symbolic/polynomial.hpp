#pragma once

#include <string>
#include <vector>

#include "fermatlab/scalars.hpp"

namespace fermatlab::symbolic {

/// Dense univariate polynomial over Q(i), coefficients in ascending degree.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<RationalComplex> coefficients);

    static Polynomial constant(const RationalComplex& c) { return Polynomial({c}); }
    static Polynomial monomial(const RationalComplex& c, int degree);
    static Polynomial variable() { return monomial(RationalComplex(1), 1); }

    /// −1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const { return coeffs_.empty(); }
    RationalComplex coefficient(int degree) const;
    const std::vector<RationalComplex>& coefficients() const { return coeffs_; }
    RationalComplex leadingCoefficient() const;

    RationalComplex evaluate(const RationalComplex& x) const;
    Complex evaluate(Complex x) const;

    /// Human-readable form, highest degree first, e.g. "44/3*P^4 - 4*P^3 + 1/36*P + 1/12".
    std::string toString(const std::string& variable) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const RationalComplex& s, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(int exponent) const;

private:
    void trim();
    std::vector<RationalComplex> coeffs_;
};

}  // namespace fermatlab::symbolic

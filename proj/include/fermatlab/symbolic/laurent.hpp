#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermatlab/errors.hpp"
#include "fermatlab/scalars.hpp"

namespace fermatlab::symbolic {

template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<RationalComplex> {
    static constexpr bool kExact = true;
    static bool isZero(const RationalComplex& c) { return c.isZero(); }
    static RationalComplex fromInt(long v) { return RationalComplex(v); }
    static double magnitude(const RationalComplex& c) { return std::abs(c.toComplex()); }
    /// exp(c) stays in Q(i) only for c = 0.
    static std::optional<RationalComplex> exp(const RationalComplex& c) {
        if (c.isZero()) return RationalComplex(1);
        return std::nullopt;
    }
    static std::string toString(const RationalComplex& c) { return c.toString(); }
};

template <>
struct CoefficientTraits<Complex> {
    static constexpr bool kExact = false;
    static bool isZero(const Complex& c) { return c == Complex(0.0, 0.0); }
    static Complex fromInt(long v) { return Complex(static_cast<double>(v), 0.0); }
    static double magnitude(const Complex& c) { return std::abs(c); }
    static std::optional<Complex> exp(const Complex& c) { return std::exp(c); }
    static std::string toString(const Complex& c) {
        return "(" + std::to_string(c.real()) + "," + std::to_string(c.imag()) + ")";
    }
};

/// Truncated Laurent series Σ a_k w^k + O(w^precision) in one formal variable.
///
/// Precision is tracked exactly: products and inverses shrink it according to
/// the operands' valuations, so a coefficient is never reported that the
/// inputs did not determine. Principal parts deeper than kMaxPoleOrder are
/// rejected.
template <class C>
class LaurentSeries {
public:
    using Traits = CoefficientTraits<C>;
    static constexpr int kMaxPoleOrder = 12;

    explicit LaurentSeries(int precision = 0) : valuation_(precision), precision_(precision) {}

    static LaurentSeries constant(const C& c, int precision) { return monomial(c, 0, precision); }

    static LaurentSeries monomial(const C& c, int exponent, int precision) {
        return fromCoefficients(exponent, {c}, precision);
    }

    static LaurentSeries fromCoefficients(int valuation, std::vector<C> coefficients, int precision) {
        LaurentSeries s(precision);
        s.valuation_ = valuation;
        s.coeffs_ = std::move(coefficients);
        s.normalize();
        return s;
    }

    /// Lowest exponent with a nonzero coefficient; equals precision() for the zero series.
    int valuation() const { return valuation_; }
    /// Exponent of the O-term: coefficients below it are exact.
    int precision() const { return precision_; }
    /// Highest exponent whose coefficient is known.
    int truncationOrder() const { return precision_ - 1; }
    bool isZero() const { return coeffs_.empty(); }
    const std::vector<C>& coefficients() const { return coeffs_; }

    C coefficient(int exponent) const {
        const int k = exponent - valuation_;
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Traits::fromInt(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    LaurentSeries truncated(int precision) const {
        return fromCoefficients(valuation_, coeffs_, std::min(precision, precision_));
    }

    LaurentSeries operator-() const {
        LaurentSeries r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const int precision = std::min(a.precision_ + b.valuation_, b.precision_ + a.valuation_);
        if (a.isZero() || b.isZero()) return LaurentSeries(precision);
        const int valuation = a.valuation_ + b.valuation_;
        const int length = precision - valuation;
        if (length <= 0) return LaurentSeries(precision);
        std::vector<C> out(static_cast<std::size_t>(length), Traits::fromInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size() && static_cast<int>(i) < length; ++i) {
            if (Traits::isZero(a.coeffs_[i])) continue;
            const std::size_t limit = std::min(b.coeffs_.size(), static_cast<std::size_t>(length) - i);
            for (std::size_t j = 0; j < limit; ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return fromCoefficients(valuation, std::move(out), precision);
    }

    friend LaurentSeries operator*(const C& s, const LaurentSeries& a) {
        LaurentSeries r = a;
        for (auto& c : r.coeffs_) c *= s;
        r.normalize();
        return r;
    }

    /// 1/a. Throws InvalidInput for the zero series.
    LaurentSeries inverse() const {
        if (isZero()) throw InvalidInput("cannot invert the zero series");
        const int relative = precision_ - valuation_;
        std::vector<C> out(static_cast<std::size_t>(relative), Traits::fromInt(0));
        const C lead_inverse = Traits::fromInt(1) / coeffs_[0];
        out[0] = lead_inverse;
        for (int k = 1; k < relative; ++k) {
            C acc = Traits::fromInt(0);
            const int top = std::min(k, static_cast<int>(coeffs_.size()) - 1);
            for (int j = 1; j <= top; ++j) {
                acc += coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
            }
            out[static_cast<std::size_t>(k)] = -(acc * lead_inverse);
        }
        return fromCoefficients(-valuation_, std::move(out), -valuation_ + relative);
    }

    LaurentSeries pow(int exponent) const {
        if (exponent < 0) return inverse().pow(-exponent);
        if (exponent == 0) return constant(Traits::fromInt(1), std::max(precision_ - valuation_, 1));
        std::optional<LaurentSeries> result;
        LaurentSeries base = *this;
        for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
            if (e & 1U) result = result ? *result * base : base;
            if (e > 1) base = base * base;
        }
        return *result;
    }

    LaurentSeries derivative() const {
        std::vector<C> out;
        out.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            out.push_back(Traits::fromInt(valuation_ + static_cast<int>(i)) * coeffs_[i]);
        }
        return fromCoefficients(valuation_ - 1, std::move(out), precision_ - 1);
    }

    /// Largest |coefficient| among known terms.
    double maxMagnitude() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, Traits::magnitude(c));
        return m;
    }

private:
    static LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
        const int precision = std::min(a.precision_, b.precision_);
        const int valuation = std::min(a.valuation_, b.valuation_);
        const int length = precision - valuation;
        if (length <= 0) return LaurentSeries(precision);
        std::vector<C> out(static_cast<std::size_t>(length), Traits::fromInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            const int k = a.valuation_ + static_cast<int>(i) - valuation;
            if (k < length) out[static_cast<std::size_t>(k)] += a.coeffs_[i];
        }
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            const int k = b.valuation_ + static_cast<int>(i) - valuation;
            if (k >= length) continue;
            if (subtract) {
                out[static_cast<std::size_t>(k)] -= b.coeffs_[i];
            } else {
                out[static_cast<std::size_t>(k)] += b.coeffs_[i];
            }
        }
        return fromCoefficients(valuation, std::move(out), precision);
    }

    void normalize() {
        const int keep = std::max(0, precision_ - valuation_);
        if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(static_cast<std::size_t>(keep));
        std::size_t lead = 0;
        while (lead < coeffs_.size() && Traits::isZero(coeffs_[lead])) ++lead;
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
        while (!coeffs_.empty() && Traits::isZero(coeffs_.back())) coeffs_.pop_back();
        if (coeffs_.empty()) {
            valuation_ = precision_;
            return;
        }
        if (valuation_ < -kMaxPoleOrder) {
            throw InvalidInput("Laurent principal part deeper than w^-" + std::to_string(kMaxPoleOrder));
        }
    }

    int valuation_;
    int precision_;
    std::vector<C> coeffs_;
};

using ExactSeries = LaurentSeries<RationalComplex>;
using FloatSeries = LaurentSeries<Complex>;

/// Σ w^k/k! + O(w^(order+1)).
template <class C>
LaurentSeries<C> expSeries(int order) {
    using Traits = CoefficientTraits<C>;
    std::vector<C> coeffs;
    C term = Traits::fromInt(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) term = term / Traits::fromInt(k);
        coeffs.push_back(term);
    }
    return LaurentSeries<C>::fromCoefficients(0, std::move(coeffs), order + 1);
}

/// exp(s) for s with s(0) = 0 (valuation ≥ 1).
template <class C>
LaurentSeries<C> expOfSeries(const LaurentSeries<C>& s) {
    using Traits = CoefficientTraits<C>;
    if (s.valuation() < 1) throw InvalidInput("expOfSeries: argument must vanish at the origin");
    const int precision = s.precision();
    LaurentSeries<C> result = LaurentSeries<C>::constant(Traits::fromInt(1), precision);
    LaurentSeries<C> power = result;
    for (int k = 1; k < precision + 1; ++k) {
        power = (Traits::fromInt(1) / Traits::fromInt(k)) * (power * s);
        if (power.isZero()) break;
        result = result + power;
    }
    return result.truncated(precision);
}

}  // namespace fermatlab::symbolic

#include "fermatlab/symbolic/wp_series.hpp"

#include "fermatlab/errors.hpp"

namespace fermatlab::symbolic {

template <>
RationalComplex invariantG2<RationalComplex>(const wp::Invariants& inv) {
    if (!inv.exactG2) throw NotExact("g2 has no rational-complex value");
    return *inv.exactG2;
}

template <>
RationalComplex invariantG3<RationalComplex>(const wp::Invariants& inv) {
    if (!inv.exactG3) throw NotExact("g3 has no rational-complex value");
    return *inv.exactG3;
}

template <>
Complex invariantG2<Complex>(const wp::Invariants& inv) {
    return inv.g2;
}

template <>
Complex invariantG3<Complex>(const wp::Invariants& inv) {
    return inv.g3;
}

template <class C>
std::vector<C> weierstrassCoefficients(const C& g2, const C& g3, int maxIndex) {
    using Traits = CoefficientTraits<C>;
    std::vector<C> c(static_cast<std::size_t>(std::max(maxIndex, 3)) + 1, Traits::fromInt(0));
    c[2] = g2 / Traits::fromInt(20);
    c[3] = g3 / Traits::fromInt(28);
    for (int k = 4; k <= maxIndex; ++k) {
        C sum = Traits::fromInt(0);
        for (int j = 2; j <= k - 2; ++j) sum += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k - j)];
        c[static_cast<std::size_t>(k)] = Traits::fromInt(3) * sum / Traits::fromInt((2L * k + 1) * (k - 3));
    }
    c.resize(static_cast<std::size_t>(maxIndex) + 1);
    return c;
}

template <class C>
LaurentSeries<C> wpSeries(const wp::Invariants& inv, int order) {
    using Traits = CoefficientTraits<C>;
    if (order < 4) throw InvalidInput("wpSeries: truncation order must be at least 4");
    const int max_index = (order + 2) / 2;
    const auto c = weierstrassCoefficients<C>(invariantG2<C>(inv), invariantG3<C>(inv), max_index);
    // Exponents −2, −1, 0, …, order.
    std::vector<C> coeffs(static_cast<std::size_t>(order + 3), Traits::fromInt(0));
    coeffs[0] = Traits::fromInt(1);
    for (int k = 2; k <= max_index; ++k) coeffs[static_cast<std::size_t>(2 * k)] = c[static_cast<std::size_t>(k)];
    return LaurentSeries<C>::fromCoefficients(-2, std::move(coeffs), order + 1);
}

template <class C>
LaurentSeries<C> odeResidualSeries(const wp::Invariants& inv, int order) {
    if (order < 10) throw InvalidInput("odeResidualSeries: truncation order must be at least 10");
    const auto p = wpSeries<C>(inv, order + 8);
    const auto dp = p.derivative();
    const int precision = p.precision();
    const auto g2 = LaurentSeries<C>::constant(invariantG2<C>(inv), precision);
    const auto g3 = LaurentSeries<C>::constant(invariantG3<C>(inv), precision);
    const auto four = CoefficientTraits<C>::fromInt(4);
    auto residual = dp * dp - four * (p * p * p) + g2 * p + g3;
    if (residual.precision() < order + 1) throw NumericFailure("odeResidualSeries: precision loss");
    return residual.truncated(order + 1);
}

template <class C>
LaurentSeries<C> wpOfSeries(const wp::Invariants& inv, const LaurentSeries<C>& s) {
    using Traits = CoefficientTraits<C>;
    if (s.isZero() || s.valuation() < 1) throw InvalidInput("wpOfSeries: inner series must vanish simply at 0");
    const auto s2 = s * s;
    const auto inv_s2 = s2.inverse();
    const int target = inv_s2.precision();
    // Terms c_k s^{2k−2} have valuation ≥ (2k−2)·val(s).
    const int max_index = std::max(3, (target + 2 * s.valuation()) / (2 * s.valuation()) + 1);
    const auto c = weierstrassCoefficients<C>(invariantG2<C>(inv), invariantG3<C>(inv), max_index);
    LaurentSeries<C> result = inv_s2;
    LaurentSeries<C> power = s2;  // s^{2(k−1)} at k = 2
    for (int k = 2; k <= max_index; ++k) {
        if (power.valuation() >= target) break;
        if (!Traits::isZero(c[static_cast<std::size_t>(k)])) result = result + c[static_cast<std::size_t>(k)] * power;
        power = power * s2;
    }
    return result.truncated(target);
}

template <class C>
LaurentSeries<C> wpPrimeOfSeries(const wp::Invariants& inv, const LaurentSeries<C>& s) {
    using Traits = CoefficientTraits<C>;
    if (s.isZero() || s.valuation() < 1) throw InvalidInput("wpPrimeOfSeries: inner series must vanish simply at 0");
    // ℘′(u) = −2u⁻³ + Σ (2k−2) c_k u^{2k−3}
    const auto s2 = s * s;
    const auto inv_s3 = (s2 * s).inverse();
    const int target = inv_s3.precision();
    const int max_index = std::max(3, (target + 3 * s.valuation()) / (2 * s.valuation()) + 2);
    const auto c = weierstrassCoefficients<C>(invariantG2<C>(inv), invariantG3<C>(inv), max_index);
    LaurentSeries<C> result = Traits::fromInt(-2) * inv_s3;
    LaurentSeries<C> power = s;  // s^{2k−3} at k = 2
    for (int k = 2; k <= max_index; ++k) {
        if (power.valuation() >= target) break;
        if (!Traits::isZero(c[static_cast<std::size_t>(k)])) {
            result = result + (Traits::fromInt(2 * k - 2) * c[static_cast<std::size_t>(k)]) * power;
        }
        power = power * s2;
    }
    return result.truncated(target);
}

template std::vector<RationalComplex> weierstrassCoefficients(const RationalComplex&, const RationalComplex&, int);
template std::vector<Complex> weierstrassCoefficients(const Complex&, const Complex&, int);
template ExactSeries wpSeries<RationalComplex>(const wp::Invariants&, int);
template FloatSeries wpSeries<Complex>(const wp::Invariants&, int);
template ExactSeries odeResidualSeries<RationalComplex>(const wp::Invariants&, int);
template FloatSeries odeResidualSeries<Complex>(const wp::Invariants&, int);
template ExactSeries wpOfSeries<RationalComplex>(const wp::Invariants&, const ExactSeries&);
template FloatSeries wpOfSeries<Complex>(const wp::Invariants&, const FloatSeries&);
template ExactSeries wpPrimeOfSeries<RationalComplex>(const wp::Invariants&, const ExactSeries&);
template FloatSeries wpPrimeOfSeries<Complex>(const wp::Invariants&, const FloatSeries&);

}  // namespace fermatlab::symbolic

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fermatlab/scalars.hpp"
#include "fermatlab/simd/kernels.hpp"
#include "fermatlab/wp/invariants.hpp"

namespace fermatlab::wp {

/// Generators of half the period lattice 2ω₁ℤ + 2ω₃ℤ, with Im(ω₃/ω₁) > 0.
struct HalfPeriods {
    Complex omega1;
    Complex omega3;
};

struct WpValue {
    Complex wp;
    Complex wpPrime;
    Complex wpPrimePrime;
};

/// Numeric ℘ for fixed invariants.
///
/// Construction finds the period lattice: candidate periods come from complex
/// AGMs of the root differences over every root ordering and sign, each
/// candidate is accepted only if ℘(P/2) evaluated straight from the Laurent
/// series (no lattice involved) lands on a root of 4t³ − g₂t − g₃, and the
/// accepted vectors are reduced to a basis that is then checked to be
/// primitive. Evaluation reduces z into the centred cell, halves it until the
/// Laurent series converges fast, and doubles back with
///   ℘(2u) = ¼(℘″(u)/℘′(u))² − 2℘(u).
/// Instances are immutable; concurrent evaluation is safe.
class Weierstrass {
public:
    static constexpr double kHardPoleRadius = 1e-8;
    static constexpr double kSeriesRadiusFraction = 0.3;
    static constexpr int kMaxDuplications = 8;

    explicit Weierstrass(const Invariants& inv);

    const Invariants& invariants() const { return inv_; }
    const HalfPeriods& halfPeriods() const { return half_; }
    const std::array<Complex, 3>& roots() const { return roots_; }
    /// |2ω₁|, the shortest nonzero period.
    double shortestPeriod() const { return std::abs(2.0 * half_.omega1); }

    /// Representative of z mod the lattice closest to the origin.
    Complex reduce(Complex z) const;

    /// Throws PoleProximity within kHardPoleRadius of a lattice point.
    WpValue evaluate(Complex z) const;

    struct Batch {
        simd::ComplexArray wp;
        simd::ComplexArray wpPrime;
        std::vector<std::uint8_t> pole;  // 1 where the point hit the hard pole radius; values are NaN there
    };
    Batch evaluate(const simd::ComplexArray& z) const;

    /// Series + duplication without lattice reduction; valid wherever the
    /// duplication ladder does not pass through a pole. Used to validate periods.
    WpValue evaluateUnreduced(Complex z) const;

    /// Float Laurent coefficients c_k (index k), k ≤ kSeriesTerms.
    std::span<const Complex> seriesCoefficients() const { return coeffs_; }

private:
    static constexpr int kSeriesTerms = 26;

    void findLattice();
    WpValue seriesAndLadder(Complex u, int doublings) const;

    Invariants inv_;
    std::array<Complex, 3> roots_{};
    std::vector<Complex> coeffs_;
    std::vector<Complex> wpHorner_;       // c_{j+2}
    std::vector<Complex> wpPrimeHorner_;  // (2j+2)·c_{j+2}
    double radiusEstimate_ = 0.0;
    HalfPeriods half_{};
    Complex basis1_{};
    Complex basis2_{};
};

/// Half-periods for the given invariants (builds a Weierstrass instance).
HalfPeriods periodsFromInvariants(const Invariants& inv);

/// One-shot evaluation of ℘, ℘′, ℘″ at z.
WpValue wpEval(Complex z, const Invariants& inv);

}  // namespace fermatlab::wp

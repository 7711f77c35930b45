#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fermatlab/scalars.hpp"

namespace fermatlab::wp {

/// (g₂, g₃) in the standard form (℘′)² = 4℘³ − g₂℘ − g₃.
///
/// Equations written as (℘′)² = 4℘³ + A℘ + B are stored as g₂ = −A, g₃ = −B;
/// this is the only place that convention is decided.
struct Invariants {
    Complex g2;
    Complex g3;
    std::optional<RationalComplex> exactG2;
    std::optional<RationalComplex> exactG3;

    static Invariants exact(const RationalComplex& g2, const RationalComplex& g3);
    static Invariants approx(Complex g2, Complex g3);

    bool isExact() const { return exactG2.has_value() && exactG3.has_value(); }

    /// g₂³ − 27g₃².
    Complex discriminant() const;

    /// Throws DegenerateLattice when |Δ| ≤ 1e−12·(|g₂|³ + 27|g₃|²).
    void requireNondegenerate() const;

    std::string describe() const;
};

enum class CaseId { II, III, IV };

/// Accepts "II", "III", "IV" (also "2", "3", "4", "case2", ...).
CaseId parseCaseId(std::string_view text);

/// II/III → (0, 1); IV → (−1/12, −1/6).
Invariants invariantsFromCase(CaseId id);

/// g₂ = −27τ·4^{1/3}·(8 − τ³), g₃ = −54(τ⁶ + 20τ³ − 8). Exact only for τ = 0,
/// since g₂ carries the irrational factor 4^{1/3} otherwise.
/// Throws DegenerateLattice when τ³ = −1.
Invariants invariantsFromTau(Complex tau, const std::optional<RationalComplex>& exactTau = std::nullopt);

/// The two algebraic forms of the modular discriminant as a function of τ.
struct TauDiscriminant {
    Complex braceForm;
    Complex factoredForm;
    std::optional<RationalComplex> exactBraceForm;
    std::optional<RationalComplex> exactFactoredForm;

    Complex difference() const { return braceForm - factoredForm; }
    std::optional<RationalComplex> exactDifference() const;
};

/// Brace form {−27τ4^{1/3}(8−τ³)}³ − 27{54(τ⁶+20τ³−8)}² next to −5038848(τ³+1)³.
/// With an exact τ both are computed in Q(i), using (4^{1/3})³ = 4.
TauDiscriminant discriminantOfTau(Complex tau, const std::optional<RationalComplex>& exactTau = std::nullopt);

}  // namespace fermatlab::wp

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermatlab/families/families.hpp"
#include "fermatlab/verify/grid.hpp"

namespace fermatlab::verify {

enum class DiagnosticKind { H0, H1, H2 };
std::string toString(DiagnosticKind kind);
DiagnosticKind parseDiagnosticKind(const std::string& text);

/// H₁ = 4℘³ + 27τ∛4(8−τ³)℘ + 54(τ⁶+20τ³−8) − 9(−τ∛4℘ + 12 + 3τ³)².
families::Expr diagnosticH1(const families::Expr& wp, const ParsedNumber& tau);
/// H₂ = {∛4(℘′)² − (∛4℘ + 9τ²)℘″}² − {36∛4(τ³+1)℘′}².
families::Expr diagnosticH2(const families::Expr& wp, const families::Expr& wpPrime,
                            const wp::Invariants& inv, const ParsedNumber& tau);
/// H₀ = f′(g′)² / ((f^m − 1)(g^n − 1)).
families::Expr diagnosticH0(const families::SolutionFamily& family);

struct LimitSample {
    double radius = 0.0;
    Complex value;
};

/// Small-|z| limit of H/℘^k (k = 3 for H₁, 6 for H₂): samples at two radii
/// along a fixed ray and a Richardson step assuming an O(|z|²) error.
struct LimitEstimate {
    int power = 0;
    Complex expected;
    std::vector<LimitSample> samples;
    Complex extrapolated;
    double error = 0.0;  // |extrapolated − expected|
};

struct GridMinimum {
    double minModulus = 0.0;
    Complex argmin;
    /// Newton from the grid minimum; set when it converged.
    std::optional<Complex> zero;
    double modulusAtZero = 0.0;
};

struct CircleBound {
    Complex center;
    double maxAtOuter = 0.0;  // radius 1e-2
    double maxAtInner = 0.0;  // radius 1e-3
};

struct DiagnosticReport {
    DiagnosticKind kind = DiagnosticKind::H1;
    std::string context;
    std::optional<LimitEstimate> limit;
    /// H₁, H₂: minimum over a grid of one fundamental cell.
    std::optional<GridMinimum> cellMinimum;
    /// H₀: statistics over the admissible window grid.
    std::size_t gridPoints = 0;
    std::size_t gridFinite = 0;
    double gridMaxModulus = 0.0;
    double gridMedianModulus = 0.0;
    /// H₀: |H₀| on small circles around zeros of (f^m − 1)(g^n − 1); a
    /// pole would grow by 10^order from the outer to the inner circle.
    std::vector<CircleBound> nearPoints;
    std::vector<std::string> notes;
};

/// H₁ or H₂ for τ with β = identity (℘ from invariantsFromTau).
DiagnosticReport diagnoseTau(DiagnosticKind kind, const ParsedNumber& tau, std::size_t cellPerSide = 60);
/// H₀ for a Fermat-kind family on a window.
DiagnosticReport diagnoseH0(const families::SolutionFamily& family, const ScanWindow& window);

}  // namespace fermatlab::verify

#pragma once

#include <string>
#include <vector>

#include "fermatlab/verify/report.hpp"
#include "fermatlab/wp/invariants.hpp"

namespace fermatlab::acceptance {

/// Invariant sets the criteria are run against. Replacing one with a wrong
/// value must make the suite fail.
struct Constants {
    wp::Invariants equianharmonic;  // (0, 1): cases II, III, V
    wp::Invariants caseFour;        // (−1/12, −1/6)
    wp::Invariants tauZero;         // (0, 432)

    static Constants standard();
    /// g₃ of the equianharmonic set replaced by 101/100.
    static Constants corrupted();
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budgetSeconds = 0.0;
    /// Deterministic outputs of the criterion (no timings).
    verify::Json artifact;
};

inline constexpr int kCriterionCount = 10;

CriterionResult runCriterion(int id, const Constants& constants);
std::vector<CriterionResult> runAcceptance(const Constants& constants = Constants::standard());

/// The deterministic part of a run: every artifact of criteria 1–9.
std::string artifactsJson(const std::vector<CriterionResult>& results);

std::string summaryTable(const std::vector<CriterionResult>& results);
verify::Json summaryJson(const std::vector<CriterionResult>& results);

/// ∫_{e₁}^{∞} dt/√(4t³ − 1), e₁ = 4^{−1/3}, by double-exponential quadrature.
double omega1Oracle();

/// ℘″(z) from engine values on a circle of radius r (Cauchy integral,
/// trapezoid rule), independent of the relation ℘″ = 6℘² − g₂/2.
Complex cauchySecondDerivative(const wp::Weierstrass& engine, Complex z, double r, int nodes = 64);

}  // namespace fermatlab::acceptance

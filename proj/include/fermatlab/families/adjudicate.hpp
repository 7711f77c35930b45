#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermatlab/families/families.hpp"
#include "fermatlab/symbolic/laurent.hpp"
#include "fermatlab/symbolic/quotient.hpp"

namespace fermatlab::families {

enum class Outcome { Zero, NonZero };
enum class Method { QuotientRing, ExactSeries, FloatSeries };

std::string toString(Outcome outcome);
std::string toString(Method method);

/// Result of an exact (or, failing that, floating) identity check.
///
/// The quotient-ring route is authoritative when the family carries a
/// rationalized residual; the series route runs alongside as a cross-check.
struct Verdict {
    std::string familyId;
    Outcome outcome = Outcome::Zero;
    Method method = Method::QuotientRing;
    std::string variable = "P";

    std::optional<symbolic::QuotientVerdict> quotient;
    /// Quotient residual parts with the cleared denominator's sign fixed.
    std::optional<symbolic::Polynomial> canonicalEven;
    std::optional<symbolic::Polynomial> canonicalOdd;

    std::optional<symbolic::ExactSeries> exactSeries;
    std::optional<symbolic::FloatSeries> floatSeries;
    std::optional<Outcome> seriesOutcome;
    /// Set when both routes ran.
    std::optional<bool> routesAgree;

    std::vector<std::string> notes;

    bool zero() const { return outcome == Outcome::Zero; }
};

struct AdjudicateOptions {
    int order = 40;
    /// Float route: |r_k| ≤ floatTolerance·max_{|j−k|≤4} Σ_t |t_j| for every coefficient.
    double floatTolerance = 1e-9;
    bool runSeries = true;
};

Verdict adjudicate(const SolutionFamily& family, const AdjudicateOptions& options = {});

/// Both conventions f² ± 2ρfg + g² = 1 for one ρ.
struct QuadraticSignReport {
    Verdict plus;
    Verdict minus;
    /// "plus", "minus", "both" or "neither".
    std::string vanishing;
};

QuadraticSignReport quadraticSignReport(const ParsedNumber& rho, const FamilyParams& params = {},
                                        const AdjudicateOptions& options = {});

}  // namespace fermatlab::families

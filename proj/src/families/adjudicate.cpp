#include "fermatlab/families/adjudicate.hpp"

#include <algorithm>
#include <cmath>

#include "fermatlab/errors.hpp"

namespace fermatlab::families {

namespace {

Outcome floatOutcome(const std::vector<symbolic::FloatSeries>& terms, const symbolic::FloatSeries& sum, int order,
                     double tolerance) {
    // A term coefficient can itself cancel to rounding noise (every odd power of
    // an even identity), so the scale at w^k looks at the neighbouring orders too.
    constexpr int kWindow = 4;
    std::vector<double> level;
    const int low = sum.valuation() - kWindow;
    for (int k = low; k <= order + kWindow; ++k) {
        double s = 0.0;
        for (const auto& t : terms) s += std::abs(t.coefficient(k));
        level.push_back(s);
    }
    for (int k = sum.valuation(); k <= order; ++k) {
        const double r = std::abs(sum.coefficient(k));
        if (r == 0.0) continue;
        double scale = 0.0;
        for (int j = k - kWindow; j <= k + kWindow; ++j) scale = std::max(scale, level[static_cast<std::size_t>(j - low)]);
        if (r > tolerance * scale) return Outcome::NonZero;
    }
    return Outcome::Zero;
}

void runSeries(const SolutionFamily& family, const AdjudicateOptions& options, Verdict& v) {
    const auto terms = family.residualTerms();
    try {
        symbolic::ExactSeries sum = seriesThrough<RationalComplex>(terms.front(), options.order);
        for (std::size_t k = 1; k < terms.size(); ++k) {
            sum = sum + seriesThrough<RationalComplex>(terms[k], options.order);
        }
        v.seriesOutcome = sum.isZero() ? Outcome::Zero : Outcome::NonZero;
        v.exactSeries = sum;
        return;
    } catch (const NotExact& e) {
        v.notes.push_back(std::string("exact series unavailable: ") + e.what());
    }
    std::vector<symbolic::FloatSeries> parts;
    for (const auto& t : terms) parts.push_back(seriesThrough<Complex>(t, options.order));
    symbolic::FloatSeries sum = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) sum = sum + parts[k];
    v.seriesOutcome = floatOutcome(parts, sum, options.order, options.floatTolerance);
    v.floatSeries = sum;
}

}  // namespace

std::string toString(Outcome outcome) { return outcome == Outcome::Zero ? "ZERO" : "NONZERO"; }

std::string toString(Method method) {
    switch (method) {
        case Method::QuotientRing:
            return "quotient-ring";
        case Method::ExactSeries:
            return "exact-series";
        case Method::FloatSeries:
            return "float-series";
    }
    return "?";
}

Verdict adjudicate(const SolutionFamily& family, const AdjudicateOptions& options) {
    Verdict v;
    v.familyId = family.id;
    v.variable = family.rationalizedVariable;

    if (family.rationalized) {
        v.quotient = symbolic::quotientAdjudicate(*family.rationalized);
        v.canonicalEven = symbolic::canonicalSign(v.quotient->even);
        v.canonicalOdd = symbolic::canonicalSign(v.quotient->odd);
        v.method = Method::QuotientRing;
        v.outcome = v.quotient->zero ? Outcome::Zero : Outcome::NonZero;
    }

    if (options.runSeries || !family.rationalized) {
        try {
            runSeries(family, options, v);
        } catch (const InvalidInput& e) {
            // ℘ of an argument that does not vanish at 0, e.g. β = e^w.
            v.notes.push_back(std::string("series route unavailable: ") + e.what());
        }
    }

    if (!family.rationalized) {
        if (!v.seriesOutcome) throw InvalidInput("family '" + family.id + "' has no route to an exact verdict");
        v.outcome = *v.seriesOutcome;
        v.method = v.exactSeries ? Method::ExactSeries : Method::FloatSeries;
    } else if (v.seriesOutcome) {
        v.routesAgree = *v.seriesOutcome == v.outcome;
        if (!*v.routesAgree) v.notes.push_back("series route disagrees with the quotient-ring verdict");
    }
    return v;
}

QuadraticSignReport quadraticSignReport(const ParsedNumber& rho, const FamilyParams& params,
                                        const AdjudicateOptions& options) {
    QuadraticSignReport report;
    report.plus = adjudicate(buildQuadratic(rho, SignConvention::Plus, params), options);
    report.minus = adjudicate(buildQuadratic(rho, SignConvention::Minus, params), options);
    const bool p = report.plus.zero();
    const bool m = report.minus.zero();
    report.vanishing = p && m ? "both" : p ? "plus" : m ? "minus" : "neither";
    return report;
}

}  // namespace fermatlab::families

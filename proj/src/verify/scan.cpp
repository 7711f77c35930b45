#include "fermatlab/verify/scan.hpp"

#include <algorithm>
#include <cmath>

#include "fermatlab/errors.hpp"
#include "fermatlab/families/expr.hpp"

namespace fermatlab::verify {

namespace {

constexpr double kWpCeiling = 1e8;

Report scanExpression(const families::SolutionFamily& family, const families::Expr& target, const ScanWindow& window,
                      double tolerance, const std::string& command) {
    if (!(tolerance > 0.0)) throw InvalidInput("tolerance must be positive");
    window.validate();
    Report report;
    report.command = command;
    report.familyId = family.id;
    report.params = family.paramList;
    report.window = window;
    report.tolerance = tolerance;

    families::BatchEvaluator ev(window.points());
    const auto& r = ev.evaluate(target);
    const auto& f = ev.evaluate(family.f);
    const auto& g = ev.evaluate(family.g);
    const auto& guards = ev.guards();
    const std::size_t n = ev.size();
    report.pointsTotal = n;
    report.points.resize(n);

    std::vector<double> admissible;
    admissible.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        PointRecord& p = report.points[k];
        p.z = ev.points().at(k);
        const Complex rk = r.at(k);
        p.residualAbs = std::abs(rk);
        const double scale = 1.0 + std::pow(std::abs(f.at(k)), family.m) + std::pow(std::abs(g.at(k)), family.n);
        p.residualRel = p.residualAbs / scale;
        p.excluded = guards.pole[k] != 0 || guards.minDenominator[k] < window.softExclusionRadius ||
                     guards.maxWp[k] > kWpCeiling || guards.minLatticeDistance[k] < window.softExclusionRadius ||
                     !std::isfinite(p.residualRel);
        if (p.excluded) {
            ++report.pointsExcluded;
            continue;
        }
        admissible.push_back(p.residualRel);
        report.maxResidual = std::max(report.maxResidual, p.residualRel);
        if (p.residualRel >= tolerance && report.failures.size() < Report::kMaxFailures) {
            report.failures.push_back({p.z, p.residualRel});
        }
    }

    const double excludedFraction = static_cast<double>(report.pointsExcluded) / static_cast<double>(n);
    if (admissible.empty() || excludedFraction > Report::kMaxExclusionFraction) {
        report.verdict = ScanVerdict::Inconclusive;
    }
    if (!admissible.empty()) {
        const std::size_t idx =
            static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(admissible.size()))) - 1;
        std::nth_element(admissible.begin(), admissible.begin() + static_cast<std::ptrdiff_t>(idx), admissible.end());
        report.p95Residual = admissible[idx];
        if (excludedFraction <= Report::kMaxExclusionFraction) {
            report.verdict = report.p95Residual < tolerance ? ScanVerdict::Pass : ScanVerdict::Fail;
        }
    }
    return report;
}

}  // namespace

std::string toString(ScanVerdict verdict) {
    switch (verdict) {
        case ScanVerdict::Pass:
            return "PASS";
        case ScanVerdict::Fail:
            return "FAIL";
        case ScanVerdict::Inconclusive:
            return "INCONCLUSIVE";
    }
    return "?";
}

Report residualScan(const families::SolutionFamily& family, const ScanWindow& window, double tolerance) {
    return scanExpression(family, family.residual(), window, tolerance, "verify");
}

Report derivativeIdentityScan(const families::SolutionFamily& family, const ScanWindow& window, double tolerance) {
    return scanExpression(family, family.derivativeIdentity(), window, tolerance, "verify-derivative");
}

}  // namespace fermatlab::verify

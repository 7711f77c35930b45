#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fermatlab/families/families.hpp"
#include "fermatlab/verify/grid.hpp"

namespace fermatlab::verify {

enum class ScanVerdict { Pass, Fail, Inconclusive };
std::string toString(ScanVerdict verdict);

struct PointRecord {
    Complex z;
    double residualAbs = 0.0;
    double residualRel = 0.0;
    bool excluded = false;
};

struct Failure {
    Complex z;
    double residual = 0.0;  // relative
};

/// Outcome of a grid scan. PASS iff p95Residual < tolerance and at most
/// kMaxExclusionFraction of the points were excluded; too many exclusions
/// make the scan INCONCLUSIVE.
struct Report {
    static constexpr double kMaxExclusionFraction = 0.2;
    static constexpr std::size_t kMaxFailures = 25;

    std::string command;
    std::string familyId;
    std::vector<std::pair<std::string, std::string>> params;
    ScanWindow window;
    double tolerance = 0.0;
    std::size_t pointsTotal = 0;
    std::size_t pointsExcluded = 0;
    double maxResidual = 0.0;
    double p95Residual = 0.0;
    ScanVerdict verdict = ScanVerdict::Inconclusive;
    /// First kMaxFailures admissible points with residual ≥ tolerance, grid order.
    std::vector<Failure> failures;
    std::vector<PointRecord> points;
};

/// Equation residual of the family on the window grid, relative to
/// 1 + |f|^m + |g|^n. Points are excluded near poles: a hard pole, a
/// denominator below the soft radius, |℘| > 1e8, or a ℘ argument within the
/// soft radius of the lattice.
Report residualScan(const families::SolutionFamily& family, const ScanWindow& window, double tolerance);

/// |m f^{m−1} f′ + n g^{n−1} g′| on the grid, same scaling and exclusions.
Report derivativeIdentityScan(const families::SolutionFamily& family, const ScanWindow& window, double tolerance);

}  // namespace fermatlab::verify

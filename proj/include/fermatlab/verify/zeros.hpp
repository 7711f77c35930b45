#pragma once

#include <string>
#include <vector>

#include "fermatlab/families/expr.hpp"
#include "fermatlab/verify/grid.hpp"

namespace fermatlab::verify {

struct CriticalPoint {
    Complex location;
    /// Zero multiplicity, or pole order for entries of ZeroSet::poles.
    int multiplicity = 0;
    /// Unrounded winding number of the small circle.
    double windingRaw = 0.0;
};

/// Zeros (and poles) of one expression inside a window.
///
/// windowTotal is the boundary argument-principle integral, which counts
/// zeros minus poles; a scan only returns when Σ zero multiplicities −
/// Σ pole orders equals it.
struct ZeroSet {
    std::vector<CriticalPoint> roots;
    std::vector<CriticalPoint> poles;
    int windowTotal = 0;
    double windowTotalRaw = 0.0;
    ScanWindow window;

    int zeroCount() const;
    int poleCount() const;
};

struct ZeroScanOptions {
    /// Newton seeds per unit length.
    double seedDensity = 5.0;
    int maxNewtonSteps = 50;
    double convergence = 1e-12;
    double dedupeRadius = 1e-7;
    double windingRadius = 1e-3;
    int windingNodes = 256;
    double boundaryClearance = 1e-6;
};

/// Newton (on e/e′, so multiple zeros and poles converge quadratically) from
/// every seed, dedupe, classify by the winding number on a small circle, and
/// reconcile with the boundary integral, reseeding on grids up to 8× finer
/// while the counts disagree. Throws AnalyzerFailure on a
/// non-integral winding number, crowded critical points, a critical point on
/// the boundary, a total mismatch, or an identically vanishing expression.
ZeroSet zeroScan(const families::Expr& e, const ScanWindow& window, const ZeroScanOptions& options = {});

/// (1/2πi)∮ e′/e around a circle, trapezoid rule.
double windingNumber(const families::Expr& e, const families::Expr& de, Complex center, double radius, int nodes);

enum class Relation { Subset, Superset, Equal, StrictSubset, StrictSuperset };
enum class MultiplicityMode { Counting, Ignoring };

std::string toString(Relation relation);
std::string toString(MultiplicityMode mode);
Relation parseRelation(const std::string& text);
MultiplicityMode parseMultiplicityMode(const std::string& text);

struct Comparison {
    bool holds = false;
    /// Points that break the relation (or, for a strict relation that holds,
    /// the points that make it strict).
    std::vector<Complex> witnesses;
    std::string detail;
};

/// Set or multiset relation between the zero sets A and B. Roots match
/// within matchRadius; a root with two candidates is an AnalyzerFailure.
Comparison zeroSetCompare(const ZeroSet& a, const ZeroSet& b, Relation relation, MultiplicityMode mode,
                          double matchRadius = 1e-6);

struct Attainment {
    Complex target;
    double gridMinDistance = 0.0;
    Complex gridArgmin;
    bool newtonConverged = false;
    Complex preimage;
    double preimageDistance = 0.0;
    bool preimageInWindow = false;
};

/// For each target: min |e − target| on the window grid and a Newton
/// refinement of e − target from the best grid point.
std::vector<Attainment> valueAttainmentScan(const families::Expr& e, const std::vector<Complex>& targets,
                                            const ScanWindow& window, int maxNewtonSteps = 50);

}  // namespace fermatlab::verify

#include "fermatlab/verify/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "fermatlab/errors.hpp"

namespace fermatlab::verify {

using families::BatchEvaluator;
using families::Expr;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStallStep = 1e-6;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string point(Complex z) {
    std::ostringstream out;
    out.precision(12);
    out << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

struct Candidate {
    Complex z;
    bool onPole = false;  // iteration ran into the engine's hard pole radius
};

/// Schröder iteration z ← z − e·e′/(e′² − e·e″) from every seed.
std::vector<Candidate> newtonCandidates(const Expr& e, const Expr& de, const Expr& dde, simd::ComplexArray seeds,
                                        const ZeroScanOptions& opt) {
    std::vector<Candidate> out;
    std::vector<Complex> z(seeds.size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = seeds.at(k);
    std::vector<double> lastStep(z.size(), INFINITY);
    std::vector<std::size_t> active(z.size());
    for (std::size_t k = 0; k < active.size(); ++k) active[k] = k;

    bool anyNonzero = false;
    for (int step = 0; step < opt.maxNewtonSteps && !active.empty(); ++step) {
        simd::ComplexArray pts(active.size());
        for (std::size_t k = 0; k < active.size(); ++k) pts.set(k, z[active[k]]);
        BatchEvaluator ev(std::move(pts));
        const auto& v = ev.evaluate(e);
        const auto& d = ev.evaluate(de);
        const auto& dd = ev.evaluate(dde);
        std::vector<std::size_t> next;
        for (std::size_t k = 0; k < active.size(); ++k) {
            const std::size_t idx = active[k];
            const Complex f = v.at(k);
            const Complex f1 = d.at(k);
            const Complex f2 = dd.at(k);
            if (f != Complex(0.0, 0.0)) anyNonzero = true;
            if (f == Complex(0.0, 0.0) && finite(f1)) {
                out.push_back({z[idx], false});
                continue;
            }
            if (!finite(f) || !finite(f1) || !finite(f2)) {
                if (lastStep[idx] < kStallStep) out.push_back({z[idx], true});
                continue;
            }
            const Complex denom = f1 * f1 - f * f2;
            if (denom == Complex(0.0, 0.0)) continue;
            const Complex delta = f * f1 / denom;
            if (!finite(delta)) continue;
            z[idx] -= delta;
            lastStep[idx] = std::abs(delta);
            if (lastStep[idx] < opt.convergence * std::max(1.0, std::abs(z[idx]))) {
                out.push_back({z[idx], false});
                continue;
            }
            next.push_back(idx);
        }
        active.swap(next);
        if (step == 0 && !anyNonzero) throw AnalyzerFailure("expression vanishes at every seed; zeros are not isolated");
    }
    // Cancellation can leave the step at the noise floor, above the
    // convergence test; such iterates are kept and judged by their winding number.
    for (const std::size_t idx : active) {
        if (lastStep[idx] < kStallStep) out.push_back({z[idx], false});
    }
    return out;
}

double boundaryIntegral(const Expr& e, const Expr& de, const ScanWindow& w, double panelLength) {
    using Rule = boost::math::quadrature::gauss<double, 20>;
    const auto& x = Rule::abscissa();
    const auto& wt = Rule::weights();
    const Complex corners[] = {{w.reMin, w.imMin}, {w.reMax, w.imMin}, {w.reMax, w.imMax}, {w.reMin, w.imMax}};
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    for (int side = 0; side < 4; ++side) {
        const Complex a = corners[side];
        const Complex b = corners[(side + 1) % 4];
        const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / panelLength)));
        for (int p = 0; p < panels; ++p) {
            const Complex pa = a + (b - a) * (static_cast<double>(p) / panels);
            const Complex pb = a + (b - a) * (static_cast<double>(p + 1) / panels);
            const Complex mid = 0.5 * (pa + pb);
            const Complex half = 0.5 * (pb - pa);
            for (std::size_t k = 0; k < x.size(); ++k) {
                nodes.push_back(mid + x[k] * half);
                weights.push_back(wt[k] * half);
                if (x[k] != 0.0) {
                    nodes.push_back(mid - x[k] * half);
                    weights.push_back(wt[k] * half);
                }
            }
        }
    }
    BatchEvaluator ev{simd::ComplexArray(std::span<const Complex>(nodes))};
    const auto& v = ev.evaluate(e);
    const auto& d = ev.evaluate(de);
    Complex sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) sum += weights[k] * d.at(k) / v.at(k);
    if (!finite(sum)) throw AnalyzerFailure("boundary integrand is not finite; a zero or pole lies on the window boundary");
    return (sum / Complex(0.0, kTwoPi)).real();
}

}  // namespace

int ZeroSet::zeroCount() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

int ZeroSet::poleCount() const {
    int s = 0;
    for (const auto& p : poles) s += p.multiplicity;
    return s;
}

double windingNumber(const Expr& e, const Expr& de, Complex center, double radius, int nodes) {
    simd::ComplexArray pts(static_cast<std::size_t>(nodes));
    std::vector<Complex> unit(static_cast<std::size_t>(nodes));
    for (int k = 0; k < nodes; ++k) {
        unit[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / nodes);
        pts.set(static_cast<std::size_t>(k), center + radius * unit[static_cast<std::size_t>(k)]);
    }
    BatchEvaluator ev(std::move(pts));
    const auto& v = ev.evaluate(e);
    const auto& d = ev.evaluate(de);
    // dz = iρe^{iθ}dθ, so (1/2πi)∮ = (ρ/N) Σ e′/e · e^{iθ}.
    Complex sum = 0.0;
    for (std::size_t k = 0; k < unit.size(); ++k) sum += d.at(k) / v.at(k) * unit[k];
    const Complex raw = sum * (radius / nodes);
    if (!finite(raw)) throw AnalyzerFailure("winding integrand is not finite near " + point(center));
    return raw.real();
}

static ZeroSet locate(const Expr& e, const Expr& de, const Expr& dde, const ScanWindow& window, double density,
                      const ZeroScanOptions& opt) {
    ScanWindow seedWindow = window;
    seedWindow.density = std::max(density, 4.0);
    seedWindow.validate();

    std::vector<Candidate> cands = newtonCandidates(e, de, dde, seedWindow.points(), opt);
    std::vector<Candidate> unique;
    for (const auto& c : cands) {
        if (!window.contains(c.z, opt.dedupeRadius)) continue;
        bool dup = false;
        for (const auto& u : unique) dup = dup || std::abs(u.z - c.z) < opt.dedupeRadius;
        if (!dup) unique.push_back(c);
    }
    // A zero of multiplicity k is only located to about eps^(1/k), so its
    // Newton limits scatter beyond the dedupe radius. A tight cluster that one
    // winding circle encloses with room to spare is one critical point.
    const double crowd = 4.0 * opt.windingRadius;
    std::vector<Candidate> merged;
    std::vector<bool> used(unique.size(), false);
    for (std::size_t i = 0; i < unique.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> cluster{i};
        used[i] = true;
        for (std::size_t head = 0; head < cluster.size(); ++head) {
            for (std::size_t j = 0; j < unique.size(); ++j) {
                if (!used[j] && std::abs(unique[j].z - unique[cluster[head]].z) < crowd) {
                    used[j] = true;
                    cluster.push_back(j);
                }
            }
        }
        Complex center = 0.0;
        for (const std::size_t k : cluster) center += unique[k].z;
        center /= static_cast<double>(cluster.size());
        for (const std::size_t k : cluster) {
            if (std::abs(unique[k].z - center) > 0.25 * opt.windingRadius) {
                throw AnalyzerFailure("critical points near " + point(center) +
                                      " are closer than the winding-circle spacing");
            }
        }
        merged.push_back({center, unique[cluster.front()].onPole});
    }
    unique.swap(merged);
    std::sort(unique.begin(), unique.end(), [](const Candidate& a, const Candidate& b) {
        return a.z.real() != b.z.real() ? a.z.real() < b.z.real() : a.z.imag() < b.z.imag();
    });
    for (const auto& c : unique) {
        const Complex z = c.z;
        const double clearance = std::min({z.real() - window.reMin, window.reMax - z.real(), z.imag() - window.imMin,
                                           window.imMax - z.imag()});
        if (std::abs(clearance) < opt.boundaryClearance) {
            throw AnalyzerFailure("critical point " + point(z) + " lies on the window boundary");
        }
    }

    ZeroSet out;
    out.window = window;
    for (const auto& c : unique) {
        const double raw = windingNumber(e, de, c.z, opt.windingRadius, opt.windingNodes);
        const double rounded = std::round(raw);
        if (std::abs(raw - rounded) >= 0.1) {
            throw AnalyzerFailure("non-integral winding number " + std::to_string(raw) + " at " + point(c.z));
        }
        const int w = static_cast<int>(rounded);
        if (c.z.real() < window.reMin || c.z.real() > window.reMax || c.z.imag() < window.imMin ||
            c.z.imag() > window.imMax || w == 0) {
            continue;
        }
        if (w > 0) {
            out.roots.push_back({c.z, w, raw});
        } else {
            out.poles.push_back({c.z, -w, raw});
        }
    }

    return out;
}

ZeroSet zeroScan(const Expr& e, const ScanWindow& window, const ZeroScanOptions& opt) {
    window.validate();
    const Expr de = e.derivative();
    const Expr dde = de.derivative();

    // Refine the panel length until two successive boundary integrals agree.
    double panel = 0.25;
    double total = boundaryIntegral(e, de, window, panel);
    for (int k = 0; k < 6; ++k) {
        panel *= 0.5;
        const double finer = boundaryIntegral(e, de, window, panel);
        const bool settled = std::abs(finer - total) < 1e-6;
        total = finer;
        if (settled) break;
    }
    const double rounded = std::round(total);
    if (std::abs(total - rounded) >= 0.1) {
        throw AnalyzerFailure("boundary winding number " + std::to_string(total) + " is not an integer");
    }

    // Basins of high-order zeros next to high-order poles can fall between
    // seeds; a count that does not reconcile reseeds on a finer grid.
    std::string mismatch;
    for (double density = opt.seedDensity; density <= 8.0 * opt.seedDensity; density *= 2.0) {
        ZeroSet out = locate(e, de, dde, window, density, opt);
        out.windowTotalRaw = total;
        out.windowTotal = static_cast<int>(rounded);
        if (out.zeroCount() - out.poleCount() == out.windowTotal) return out;
        mismatch = "found " + std::to_string(out.zeroCount()) + " zeros and " + std::to_string(out.poleCount()) +
                   " poles, but the boundary integral gives " + std::to_string(out.windowTotal);
    }
    throw AnalyzerFailure(mismatch);
}

std::string toString(Relation relation) {
    switch (relation) {
        case Relation::Subset:
            return "subset";
        case Relation::Superset:
            return "superset";
        case Relation::Equal:
            return "equal";
        case Relation::StrictSubset:
            return "strict-subset";
        case Relation::StrictSuperset:
            return "strict-superset";
    }
    return "?";
}

std::string toString(MultiplicityMode mode) { return mode == MultiplicityMode::Counting ? "counting" : "ignoring"; }

Relation parseRelation(const std::string& text) {
    if (text == "subset") return Relation::Subset;
    if (text == "superset") return Relation::Superset;
    if (text == "equal") return Relation::Equal;
    if (text == "strict-subset") return Relation::StrictSubset;
    if (text == "strict-superset") return Relation::StrictSuperset;
    throw InvalidInput("unknown relation '" + text + "' (subset, superset, equal, strict-subset, strict-superset)");
}

MultiplicityMode parseMultiplicityMode(const std::string& text) {
    if (text == "counting") return MultiplicityMode::Counting;
    if (text == "ignoring") return MultiplicityMode::Ignoring;
    throw InvalidInput("unknown multiplicity mode '" + text + "' (counting, ignoring)");
}

namespace {

/// Roots of `from` that are not covered by `into`: missing locations, or
/// (counting) a larger multiplicity than the match.
std::vector<Complex> uncovered(const ZeroSet& from, const ZeroSet& into, MultiplicityMode mode, double radius) {
    std::vector<Complex> out;
    for (const auto& r : from.roots) {
        const CriticalPoint* match = nullptr;
        for (const auto& s : into.roots) {
            if (std::abs(r.location - s.location) >= radius) continue;
            if (match) throw AnalyzerFailure("ambiguous match for the root at " + point(r.location));
            match = &s;
        }
        if (!match || (mode == MultiplicityMode::Counting && r.multiplicity > match->multiplicity)) {
            out.push_back(r.location);
        }
    }
    return out;
}

}  // namespace

Comparison zeroSetCompare(const ZeroSet& a, const ZeroSet& b, Relation relation, MultiplicityMode mode,
                          double matchRadius) {
    const std::vector<Complex> aNotInB = uncovered(a, b, mode, matchRadius);
    const std::vector<Complex> bNotInA = uncovered(b, a, mode, matchRadius);
    Comparison c;
    switch (relation) {
        case Relation::Subset:
            c.holds = aNotInB.empty();
            c.witnesses = aNotInB;
            break;
        case Relation::Superset:
            c.holds = bNotInA.empty();
            c.witnesses = bNotInA;
            break;
        case Relation::Equal:
            c.holds = aNotInB.empty() && bNotInA.empty();
            c.witnesses = aNotInB;
            c.witnesses.insert(c.witnesses.end(), bNotInA.begin(), bNotInA.end());
            break;
        case Relation::StrictSubset:
            c.holds = aNotInB.empty() && !bNotInA.empty();
            c.witnesses = aNotInB.empty() ? bNotInA : aNotInB;
            break;
        case Relation::StrictSuperset:
            c.holds = bNotInA.empty() && !aNotInB.empty();
            c.witnesses = bNotInA.empty() ? aNotInB : bNotInA;
            break;
    }
    std::ostringstream d;
    d << "A has " << a.roots.size() << " distinct zeros, B has " << b.roots.size() << "; " << aNotInB.size()
      << " of A not in B, " << bNotInA.size() << " of B not in A (" << toString(mode) << " multiplicity)";
    c.detail = d.str();
    return c;
}

std::vector<Attainment> valueAttainmentScan(const Expr& e, const std::vector<Complex>& targets,
                                            const ScanWindow& window, int maxNewtonSteps) {
    BatchEvaluator grid(window.points());
    const auto& values = grid.evaluate(e);
    const Expr de = e.derivative();
    std::vector<Attainment> out;
    for (const Complex t : targets) {
        Attainment a;
        a.target = t;
        a.gridMinDistance = INFINITY;
        for (std::size_t k = 0; k < values.size(); ++k) {
            const double dist = std::abs(values.at(k) - t);
            if (dist < a.gridMinDistance) {
                a.gridMinDistance = dist;
                a.gridArgmin = grid.points().at(k);
            }
        }
        Complex z = a.gridArgmin;
        for (int step = 0; step < maxNewtonSteps; ++step) {
            const Complex v = e.evaluate(z) - t;
            const Complex d = de.evaluate(z);
            const Complex delta = v / d;
            if (!finite(delta)) break;
            z -= delta;
            if (std::abs(delta) < 1e-12 * std::max(1.0, std::abs(z))) {
                a.newtonConverged = true;
                break;
            }
        }
        const Complex v = e.evaluate(z);
        if (finite(v)) {
            a.preimage = z;
            a.preimageDistance = std::abs(v - t);
            a.preimageInWindow = window.contains(z);
        } else {
            a.newtonConverged = false;
            a.preimage = a.gridArgmin;
            a.preimageDistance = a.gridMinDistance;
            a.preimageInWindow = true;
        }
        out.push_back(a);
    }
    return out;
}

}  // namespace fermatlab::verify

#include "fermatlab/wp/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fermatlab/errors.hpp"
#include "fermatlab/symbolic/wp_series.hpp"

namespace fermatlab::wp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Lagrange–Gauss reduction; on return |b1| ≤ |b2| and |Re(b2·conj(b1))| ≤ |b1|²/2.
void gaussReduce(Complex& b1, Complex& b2) {
    for (int iter = 0; iter < 200; ++iter) {
        if (std::norm(b2) < std::norm(b1)) std::swap(b1, b2);
        const double mu = std::round((b2 * std::conj(b1)).real() / std::norm(b1));
        if (mu == 0.0) return;
        const Complex next = b2 - mu * b1;
        // Ties (hexagonal lattices) would otherwise cycle.
        if (std::norm(next) >= std::norm(b2)) return;
        b2 = next;
    }
    throw NumericFailure("lattice reduction did not terminate");
}

struct Basis {
    Complex b1;
    Complex b2;
};

// Coefficients (s, t) with z = s·b1 + t·b2.
std::pair<double, double> coordinates(const Basis& basis, Complex z) {
    const double det = cross(basis.b1, basis.b2);
    return {cross(z, basis.b2) / det, cross(basis.b1, z) / det};
}

Complex reduceModulo(const Basis& basis, Complex z) {
    const auto [s, t] = coordinates(basis, z);
    const double s0 = std::round(s);
    const double t0 = std::round(t);
    Complex best = z - s0 * basis.b1 - t0 * basis.b2;
    for (int a = -1; a <= 1; ++a) {
        for (int b = -1; b <= 1; ++b) {
            const Complex candidate = z - (s0 + a) * basis.b1 - (t0 + b) * basis.b2;
            if (std::norm(candidate) < std::norm(best)) best = candidate;
        }
    }
    return best;
}

bool parallel(Complex a, Complex b) { return std::abs(cross(a, b)) <= 1e-9 * std::abs(a) * std::abs(b); }

// Two generators for the lattice spanned by {x, y, z}; x, y independent.
Basis reduceThree(Complex x, Complex y, Complex z, double tol) {
    std::array<Complex, 3> gens{x, y, z};
    for (int iter = 0; iter < 200; ++iter) {
        std::sort(gens.begin(), gens.end(), [](Complex a, Complex b) { return std::norm(a) < std::norm(b); });
        if (std::abs(gens[0]) == 0.0) {
            gens[0] = gens[2];
            gens[2] = 0.0;
            continue;
        }
        Complex a = gens[0];
        Complex b = gens[1];
        if (std::abs(b) == 0.0 || parallel(a, b)) {
            // Euclid along the common line.
            const Complex r = (std::abs(b) == 0.0) ? Complex{} : b - std::round((b / a).real()) * a;
            gens[1] = (std::abs(r) <= tol * std::abs(a)) ? Complex{} : r;
            if (std::abs(gens[1]) == 0.0 && std::abs(gens[2]) == 0.0) {
                throw NumericFailure("period candidates do not span a lattice");
            }
            if (std::abs(gens[1]) == 0.0) std::swap(gens[1], gens[2]);
            continue;
        }
        gaussReduce(a, b);
        const Complex c = std::abs(gens[2]) == 0.0 ? Complex{} : reduceModulo({a, b}, gens[2]);
        if (std::abs(c) <= tol * std::abs(a)) return {a, b};
        gens = {a, b, c};
    }
    throw NumericFailure("lattice reduction did not terminate (three generators)");
}

// Lattice generated by `vectors` (all lattice vectors up to rounding).
Basis latticeFromVectors(std::vector<Complex> vectors, double tol) {
    if (vectors.empty()) throw NumericFailure("no period candidate validated");
    std::sort(vectors.begin(), vectors.end(), [](Complex a, Complex b) {
        if (std::norm(a) != std::norm(b)) return std::norm(a) < std::norm(b);
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    const Complex first = vectors.front();
    Complex second{};
    bool have_second = false;
    for (const Complex v : vectors) {
        if (!parallel(first, v) && std::abs(cross(first, v)) > 1e-6 * std::abs(first) * std::abs(v)) {
            second = v;
            have_second = true;
            break;
        }
    }
    if (!have_second) throw NumericFailure("period candidates do not span a lattice");
    Basis basis{first, second};
    gaussReduce(basis.b1, basis.b2);
    for (int sweep = 0; sweep < 16; ++sweep) {
        bool changed = false;
        for (const Complex v : vectors) {
            const Complex r = reduceModulo(basis, v);
            if (std::abs(r) <= tol * std::abs(basis.b1)) continue;
            basis = reduceThree(basis.b1, basis.b2, r, tol);
            changed = true;
        }
        if (!changed) return basis;
    }
    throw NumericFailure("lattice reduction did not stabilise");
}

WpValue ladder(Complex wp, Complex wpPrime, int doublings, Complex g2) {
    for (int k = 0; k < doublings; ++k) {
        const Complex wpp = 6.0 * wp * wp - 0.5 * g2;
        const Complex q = wpp / wpPrime;
        const Complex next_wp = 0.25 * q * q - 2.0 * wp;
        const Complex next_wpPrime = 0.25 * q * (12.0 * wp * wpPrime * wpPrime - wpp * wpp) / (wpPrime * wpPrime) - wpPrime;
        wp = next_wp;
        wpPrime = next_wpPrime;
    }
    return {wp, wpPrime, 6.0 * wp * wp - 0.5 * g2};
}

Complex hornerScalar(const std::vector<Complex>& coef, Complex t) {
    Complex acc = coef.back();
    for (std::size_t j = coef.size() - 1; j-- > 0;) acc = acc * t + coef[j];
    return acc;
}

}  // namespace

Weierstrass::Weierstrass(const Invariants& inv) : inv_(inv) {
    inv_.requireNondegenerate();
    coeffs_ = symbolic::weierstrassCoefficients<Complex>(inv_.g2, inv_.g3, kSeriesTerms);
    for (int k = 2; k <= kSeriesTerms; ++k) {
        wpHorner_.push_back(coeffs_[static_cast<std::size_t>(k)]);
        wpPrimeHorner_.push_back(static_cast<double>(2 * k - 2) * coeffs_[static_cast<std::size_t>(k)]);
    }
    // Radius of convergence from the tail growth; slightly below the true
    // radius because of the polynomial prefactor in c_k.
    double growth = 0.0;
    for (int k = 6; k <= kSeriesTerms; ++k) {
        const double mag = std::abs(coeffs_[static_cast<std::size_t>(k)]);
        if (mag > 0.0) growth = std::max(growth, std::pow(mag, 1.0 / (2.0 * k - 2.0)));
    }
    if (growth == 0.0) {
        for (int k = 2; k <= 5; ++k) {
            const double mag = std::abs(coeffs_[static_cast<std::size_t>(k)]);
            if (mag > 0.0) growth = std::max(growth, std::pow(mag, 1.0 / (2.0 * k - 2.0)));
        }
    }
    if (!(growth > 0.0) || !std::isfinite(growth)) throw DegenerateLattice("cannot estimate lattice scale: " + inv_.describe());
    radiusEstimate_ = 1.0 / growth;
    roots_ = cubicRoots(4.0, -inv_.g2, -inv_.g3);
    findLattice();
}

WpValue Weierstrass::seriesAndLadder(Complex u, int doublings) const {
    const Complex t = u * u;
    const Complex wp = 1.0 / t + t * hornerScalar(wpHorner_, t);
    const Complex wpPrime = -2.0 / (t * u) + u * hornerScalar(wpPrimeHorner_, t);
    return ladder(wp, wpPrime, doublings, inv_.g2);
}

WpValue Weierstrass::evaluateUnreduced(Complex z) const {
    const double limit = 0.25 * radiusEstimate_;
    Complex u = z;
    int k = 0;
    while (std::abs(u) > limit && k < 40) {
        u *= 0.5;
        ++k;
    }
    if (std::abs(u) == 0.0) throw PoleProximity("evaluation at the origin");
    return seriesAndLadder(u, k);
}

void Weierstrass::findLattice() {
    auto nearest_root = [&](Complex value) {
        double best = std::numeric_limits<double>::infinity();
        int index = -1;
        for (int j = 0; j < 3; ++j) {
            const double d = std::abs(value - roots_[static_cast<std::size_t>(j)]);
            if (d < best) best = d, index = j;
        }
        return std::pair{index, best};
    };
    // ℘(z₀ + P) = ℘(z₀) at generic offsets. The error is first order in the
    // candidate's deviation, unlike ℘(P/2) = e_j where ℘′ vanishes.
    auto is_period = [&](Complex p) {
        if (!isFinite(p) || std::abs(p) < 1e-6 * radiusEstimate_) return false;
        const double scale = 1.0 / std::norm(p);
        for (const Complex offset : {Complex(0.2113, 0.1317), Complex(-0.1731, 0.3089)}) {
            const Complex z0 = offset * p;
            const WpValue a = evaluateUnreduced(z0);
            const WpValue b = evaluateUnreduced(z0 + p);
            if (!isFinite(a.wp) || !isFinite(b.wp)) return false;
            if (std::abs(b.wp - a.wp) > 1e-9 * (std::abs(a.wp) + scale)) return false;
        }
        return true;
    };

    std::vector<Complex> accepted;
    const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const Complex pi = std::numbers::pi;
    const Complex iunit(0.0, 1.0);
    for (const auto& o : orders) {
        const Complex ei = roots_[static_cast<std::size_t>(o[0])];
        const Complex ej = roots_[static_cast<std::size_t>(o[1])];
        const Complex ek = roots_[static_cast<std::size_t>(o[2])];
        const Complex a = std::sqrt(ei - ek);
        const Complex b = std::sqrt(ei - ej);
        const Complex c = std::sqrt(ej - ek);
        const std::array<std::pair<Complex, Complex>, 4> pairs{{{a, b}, {a, -b}, {a, c}, {a, -c}}};
        for (const auto& [x, y] : pairs) {
            Complex m;
            try {
                m = complexAGM(x, y);
            } catch (const std::exception&) {
                continue;
            }
            for (const Complex p : {pi / m, iunit * pi / m}) {
                if (is_period(p)) accepted.push_back(p);
            }
        }
    }
    if (accepted.empty()) throw NumericFailure("no AGM period candidate validated for " + inv_.describe());

    Basis basis = latticeFromVectors(accepted, 1e-7);

    // A candidate set may generate a sublattice; verify primitivity and refine.
    auto is_pole = [&](Complex x) {
        const WpValue v = evaluateUnreduced(x);
        return !isFinite(v.wp) || std::abs(v.wp) * std::norm(basis.b1) > 1e10;
    };
    for (int attempt = 0; attempt < 8; ++attempt) {
        bool refined = false;
        const std::array<Complex, 3> halves{0.5 * basis.b1, 0.5 * basis.b2, 0.5 * (basis.b1 + basis.b2)};
        std::array<int, 3> which{};
        for (std::size_t j = 0; j < 3; ++j) {
            const WpValue v = evaluateUnreduced(halves[j]);
            if (!isFinite(v.wp) || std::abs(v.wp) * std::norm(basis.b1) > 1e10) {
                accepted.push_back(halves[j]);
                refined = true;
                break;
            }
            which[j] = nearest_root(v.wp).first;
        }
        if (!refined && (which[0] == which[1] || which[1] == which[2] || which[0] == which[2])) {
            throw NumericFailure("half-period values do not separate the roots for " + inv_.describe());
        }
        if (!refined) {
            for (const Complex x : {basis.b1 / 3.0, basis.b2 / 3.0, (basis.b1 + basis.b2) / 3.0, (basis.b1 - basis.b2) / 3.0}) {
                if (is_pole(x)) {
                    accepted.push_back(x);
                    refined = true;
                    break;
                }
            }
        }
        if (!refined) break;
        basis = latticeFromVectors(accepted, 1e-7);
    }

    // 2ω₁: a shortest vector of least |arg| (ties broken toward positive arg).
    const Complex u = basis.b1;
    const Complex v = basis.b2;
    std::vector<Complex> small{u, -u, v, -v, u + v, -(u + v), u - v, v - u};
    const double shortest = std::abs(u);
    Complex w1{};
    bool have = false;
    for (const Complex s : small) {
        if (std::abs(s) > shortest * (1.0 + 1e-9)) continue;
        if (!have) {
            w1 = s;
            have = true;
            continue;
        }
        const double as = std::abs(std::arg(s));
        const double aw = std::abs(std::arg(w1));
        if (as < aw - 1e-12 || (std::abs(as - aw) <= 1e-12 && std::arg(s) > std::arg(w1))) w1 = s;
    }
    const double covolume = std::abs(cross(u, v));
    Complex w3{};
    bool have3 = false;
    for (const Complex s : small) {
        if (std::abs(std::abs(cross(w1, s)) - covolume) > 1e-9 * covolume) continue;
        if (!have3 || std::norm(s) < std::norm(w3) * (1.0 - 1e-12)) {
            w3 = s;
            have3 = true;
        }
    }
    if (!have3) throw NumericFailure("could not complete the period basis");
    if ((w3 / w1).imag() < 0.0) w3 = -w3;
    basis1_ = w1;
    basis2_ = w3;
    half_ = {0.5 * w1, 0.5 * w3};
}

Complex Weierstrass::reduce(Complex z) const { return reduceModulo({basis1_, basis2_}, z); }

WpValue Weierstrass::evaluate(Complex z) const {
    if (!isFinite(z)) throw InvalidInput("non-finite evaluation point");
    Complex u = reduce(z);
    if (std::abs(u) < kHardPoleRadius) throw PoleProximity("point is within 1e-8 of a lattice point");
    const double limit = kSeriesRadiusFraction * shortestPeriod();
    int k = 0;
    while (std::abs(u) > limit) {
        if (k == kMaxDuplications) throw NumericFailure("lattice reduction failure: reduced point too far from origin");
        u *= 0.5;
        ++k;
    }
    return seriesAndLadder(u, k);
}

Weierstrass::Batch Weierstrass::evaluate(const simd::ComplexArray& z) const {
    const std::size_t n = z.size();
    Batch out{simd::ComplexArray(n), simd::ComplexArray(n), std::vector<std::uint8_t>(n, 0)};
    simd::ComplexArray t(n, Complex(0.25, 0.0));
    std::vector<Complex> us(n);
    std::vector<int> depth(n, 0);
    const double limit = kSeriesRadiusFraction * shortestPeriod();
    for (std::size_t j = 0; j < n; ++j) {
        const Complex zj = z.at(j);
        if (!isFinite(zj)) throw InvalidInput("non-finite evaluation point");
        Complex u = reduce(zj);
        if (std::abs(u) < kHardPoleRadius) {
            out.pole[j] = 1;
            continue;
        }
        int k = 0;
        while (std::abs(u) > limit) {
            if (k == kMaxDuplications) throw NumericFailure("lattice reduction failure: reduced point too far from origin");
            u *= 0.5;
            ++k;
        }
        us[j] = u;
        depth[j] = k;
        t.set(j, u * u);
    }
    const simd::ComplexArray wp_tail = simd::horner(wpHorner_, t);
    const simd::ComplexArray wpPrime_tail = simd::horner(wpPrimeHorner_, t);
    for (std::size_t j = 0; j < n; ++j) {
        if (out.pole[j]) {
            out.wp.set(j, {kNaN, kNaN});
            out.wpPrime.set(j, {kNaN, kNaN});
            continue;
        }
        const Complex u = us[j];
        const Complex tj = t.at(j);
        const Complex wp = 1.0 / tj + tj * wp_tail.at(j);
        const Complex wpPrime = -2.0 / (tj * u) + u * wpPrime_tail.at(j);
        const WpValue v = ladder(wp, wpPrime, depth[j], inv_.g2);
        out.wp.set(j, v.wp);
        out.wpPrime.set(j, v.wpPrime);
    }
    return out;
}

HalfPeriods periodsFromInvariants(const Invariants& inv) { return Weierstrass(inv).halfPeriods(); }

WpValue wpEval(Complex z, const Invariants& inv) { return Weierstrass(inv).evaluate(z); }

}  // namespace fermatlab::wp

#include "fermatlab/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fermatlab/errors.hpp"

namespace fermatlab {

RationalComplex::RationalComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

RationalComplex RationalComplex::fraction(long num, long den) {
    if (den == 0) throw InvalidInput("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return RationalComplex(q);
}

RationalComplex& RationalComplex::operator+=(const RationalComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

RationalComplex& RationalComplex::operator-=(const RationalComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

RationalComplex& RationalComplex::operator*=(const RationalComplex& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

RationalComplex& RationalComplex::operator/=(const RationalComplex& o) {
    Rational den = o.normSquared();
    if (sgn(den) == 0) throw InvalidInput("division by exact zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / den;
    Rational im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

RationalComplex RationalComplex::pow(int exponent) const {
    if (exponent < 0) return RationalComplex(1) / pow(-exponent);
    RationalComplex result(1);
    RationalComplex base = *this;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= base;
        base *= base;
    }
    return result;
}

std::string RationalComplex::toString() const {
    if (isReal()) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return imag;
    if (imag.front() != '-') imag.insert(imag.begin(), '+');
    return re_.get_str() + imag;
}

namespace {

std::optional<Rational> rationalSqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Rational r(sqrt(num), sqrt(den));
    r.canonicalize();
    return r;
}

}  // namespace

std::optional<RationalComplex> exactSqrt(const RationalComplex& value) {
    if (value.isZero()) return RationalComplex(0);
    auto modulus = rationalSqrt(value.normSquared());
    if (!modulus) return std::nullopt;
    Rational half_sum = (value.re() + *modulus) / 2;
    auto x = rationalSqrt(half_sum);
    if (!x) return std::nullopt;
    RationalComplex root;
    if (sgn(*x) != 0) {
        root = RationalComplex(*x, value.im() / (2 * *x));
    } else {
        auto y = rationalSqrt(-value.re());
        if (!y) return std::nullopt;
        root = RationalComplex(0, *y);
    }
    if (root * root != value) return std::nullopt;
    return root;
}

const AlgebraicConstants& AlgebraicConstants::get() {
    static const AlgebraicConstants constants = [] {
        AlgebraicConstants c{};
        c.cbrt4 = Complex(std::cbrt(4.0), 0.0);
        c.sqrt3 = Complex(std::numbers::sqrt3, 0.0);
        c.i = Complex(0.0, 1.0);
        c.eta[0] = Complex(1.0, 0.0);
        c.eta[1] = Complex(-0.5, std::numbers::sqrt3 / 2.0);
        c.eta[2] = Complex(-0.5, -std::numbers::sqrt3 / 2.0);
        c.zeta = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
        return c;
    }();
    return constants;
}

RationalComplex zetaExact(int index) {
    switch (((index % 4) + 4) % 4) {
        case 0: return RationalComplex(1);
        case 1: return RationalComplex::i();
        case 2: return RationalComplex(-1);
        default: return -RationalComplex::i();
    }
}

bool isFinite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::array<Complex, 3> cubicRoots(Complex a3, Complex a1, Complex a0) {
    if (a3 == Complex(0.0, 0.0)) throw InvalidInput("cubicRoots: leading coefficient is zero");
    if (!isFinite(a3) || !isFinite(a1) || !isFinite(a0)) {
        throw InvalidInput("cubicRoots: non-finite coefficient");
    }
    const Complex p = a1 / a3;
    const Complex q = a0 / a3;
    std::array<Complex, 3> roots{};
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) return roots;

    // Cardano, picking the larger-modulus branch of u³ to avoid cancellation.
    const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = -q / 2.0 + disc;
    const Complex alt = -q / 2.0 - disc;
    if (std::abs(alt) > std::abs(u3)) u3 = alt;
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const auto& eta = AlgebraicConstants::get().eta;
    for (int k = 0; k < 3; ++k) {
        const Complex uk = u * eta[k];
        roots[k] = uk - p / (3.0 * uk);
    }

    auto poly = [&](Complex t) { return t * t * t + p * t + q; };
    for (auto& t : roots) {
        for (int it = 0; it < 4; ++it) {
            const Complex d = 3.0 * t * t + p;
            if (std::abs(d) == 0.0) break;
            const Complex next = t - poly(t) / d;
            if (!(std::abs(poly(next)) < std::abs(poly(t)))) break;
            t = next;
        }
    }

    double scale = 0.0;
    for (const auto& t : roots) scale = std::max(scale, std::abs(t));
    const double tie = 1e-12 * std::max(scale, 1.0);
    std::sort(roots.begin(), roots.end(), [tie](Complex a, Complex b) {
        if (std::abs(a.real() - b.real()) > tie) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

Complex complexAGM(Complex a, Complex b) {
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0 || std::abs(a + b) == 0.0) {
        throw InvalidInput("complexAGM: requires a, b, a+b nonzero");
    }
    for (int it = 0; it < 64; ++it) {
        if (std::abs(a - b) <= 1e-15 * std::abs(a)) return (a + b) / 2.0;
        const Complex mean = (a + b) / 2.0;
        Complex geo = std::sqrt(a * b);
        if (std::abs(mean - geo) > std::abs(mean + geo)) geo = -geo;
        a = mean;
        b = geo;
    }
    throw NumericFailure("complexAGM: no convergence after 64 iterations");
}

}  // namespace fermatlab

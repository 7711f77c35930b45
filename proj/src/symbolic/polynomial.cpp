#include "fermatlab/symbolic/polynomial.hpp"

#include "fermatlab/errors.hpp"

namespace fermatlab::symbolic {

Polynomial::Polynomial(std::vector<RationalComplex> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const RationalComplex& c, int degree) {
    if (degree < 0) throw InvalidInput("negative polynomial degree");
    std::vector<RationalComplex> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().isZero()) coeffs_.pop_back();
}

RationalComplex Polynomial::coefficient(int degree) const {
    if (degree < 0 || degree > this->degree()) return RationalComplex(0);
    return coeffs_[static_cast<std::size_t>(degree)];
}

RationalComplex Polynomial::leadingCoefficient() const {
    return coeffs_.empty() ? RationalComplex(0) : coeffs_.back();
}

RationalComplex Polynomial::evaluate(const RationalComplex& x) const {
    RationalComplex acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Complex Polynomial::evaluate(Complex x) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->toComplex();
    return acc;
}

std::string Polynomial::toString(const std::string& variable) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const RationalComplex& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.isZero()) continue;
        std::string text = c.toString();
        bool negative = false;
        if (c.isReal() && sgn(c.re()) < 0) {
            negative = true;
            text = (-c).toString();
        } else if (!c.isReal() && sgn(c.re()) != 0) {
            text = "(" + text + ")";
        }
        std::string monomial;
        if (d == 0) {
            monomial = text;
        } else {
            const bool unit = text == "1";
            monomial = (unit ? "" : text + "*") + variable + (d > 1 ? "^" + std::to_string(d) : "");
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + monomial;
        } else {
            out += (negative ? " - " : " + ") + monomial;
        }
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return Polynomial();
    std::vector<RationalComplex> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].isZero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const RationalComplex& s, const Polynomial& a) {
    std::vector<RationalComplex> out = a.coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int exponent) const {
    if (exponent < 0) throw InvalidInput("negative polynomial power");
    Polynomial result = constant(RationalComplex(1));
    Polynomial base = *this;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

}  // namespace fermatlab::symbolic

#include "fermatlab/families/families.hpp"

#include <cmath>
#include <sstream>

#include "fermatlab/errors.hpp"

namespace fermatlab::families {

using symbolic::Polynomial;
using symbolic::WpQuotientPoly;

namespace {

Expr num(long p, long q = 1) { return Expr::exactConstant(RationalComplex::fraction(p, q)); }

Expr numberExpr(const ParsedNumber& v, const std::string& label = {}) {
    if (v.exact) return Expr::exactConstant(*v.exact, label);
    return Expr::constant(v.value, label);
}

std::string numberText(const ParsedNumber& v) {
    if (v.exact) return v.exact->toString();
    std::ostringstream out;
    out.precision(17);
    out << v.value.real() << (v.value.imag() < 0 ? "-" : "+") << std::abs(v.value.imag()) << "i";
    return out.str();
}

Expr sqrt3() { return Expr::constant(AlgebraicConstants::get().sqrt3, "sqrt(3)"); }
Expr cbrt4() { return Expr::constant(AlgebraicConstants::get().cbrt4, "cbrt(4)"); }

Expr eta(int k) {
    if (k < 0 || k > 2) throw InvalidInput("eta index must be 0, 1 or 2");
    if (k == 0) return Expr::exactConstant(RationalComplex(1), "eta0");
    return Expr::constant(AlgebraicConstants::get().eta[static_cast<std::size_t>(k)], "eta" + std::to_string(k));
}

Expr zeta(int k) {
    if (k < 0 || k > 3) throw InvalidInput("zeta index must be 0, 1, 2 or 3");
    return Expr::exactConstant(zetaExact(k), "zeta" + std::to_string(k));
}

Expr beta(const FamilyParams& p) {
    return p.beta == BetaKind::Exp ? Expr::exp(Expr::variable()) : Expr::variable();
}

std::shared_ptr<const wp::Weierstrass> engineFor(const wp::Invariants& standard, const FamilyParams& p) {
    return std::make_shared<const wp::Weierstrass>(p.invariantsOverride ? *p.invariantsOverride : standard);
}

Polynomial cubicOf(const wp::Invariants& inv) {
    if (!inv.isExact()) return {};
    return symbolic::weierstrassCubic(*inv.exactG2, *inv.exactG3);
}

void attachEngine(SolutionFamily& fam, const wp::Invariants& standard) {
    fam.engine = engineFor(standard, fam.params);
    fam.invariants = fam.engine->invariants();
    fam.paramList.emplace_back("g2", fam.invariants->isExact() ? fam.invariants->exactG2->toString() : numberText({fam.invariants->g2, {}}));
    fam.paramList.emplace_back("g3", fam.invariants->isExact() ? fam.invariants->exactG3->toString() : numberText({fam.invariants->g3, {}}));
    fam.paramList.emplace_back("beta", toString(fam.params.beta));
}

}  // namespace

std::string toString(EquationKind kind) {
    switch (kind) {
        case EquationKind::Fermat:
            return "fermat";
        case EquationKind::Quadratic:
            return "quadratic";
        case EquationKind::Cubic:
            return "cubic";
        case EquationKind::Corollary:
            return "corollary";
    }
    return "?";
}

std::string toString(AlphaKind kind) {
    switch (kind) {
        case AlphaKind::Exp:
            return "exp";
        case AlphaKind::Identity:
            return "identity";
        case AlphaKind::TanHalf:
            return "tan-half";
        case AlphaKind::Constant:
            return "const";
    }
    return "?";
}

std::string toString(BetaKind kind) { return kind == BetaKind::Exp ? "exp" : "identity"; }
std::string toString(SignConvention sign) { return sign == SignConvention::Plus ? "plus" : "minus"; }

AlphaKind parseAlphaKind(const std::string& text) {
    if (text == "exp") return AlphaKind::Exp;
    if (text == "identity") return AlphaKind::Identity;
    if (text == "tan-half") return AlphaKind::TanHalf;
    if (text == "const") return AlphaKind::Constant;
    throw InvalidInput("unknown alpha '" + text + "' (exp, identity, tan-half, const)");
}

BetaKind parseBetaKind(const std::string& text) {
    if (text == "identity") return BetaKind::Identity;
    if (text == "exp") return BetaKind::Exp;
    throw InvalidInput("unknown beta '" + text + "' (identity, exp)");
}

SignConvention parseSignConvention(const std::string& text) {
    if (text == "plus" || text == "+") return SignConvention::Plus;
    if (text == "minus" || text == "-") return SignConvention::Minus;
    throw InvalidInput("unknown sign '" + text + "' (plus, minus)");
}

std::vector<Expr> SolutionFamily::residualTerms() const {
    std::vector<Expr> terms{Expr::pow(f, m)};
    if (crossCoefficient) terms.push_back(*crossCoefficient * f * g);
    terms.push_back(Expr::pow(g, n));
    terms.push_back(num(-1));
    return terms;
}

Expr SolutionFamily::residual() const {
    const auto terms = residualTerms();
    Expr sum = terms.front();
    for (std::size_t k = 1; k < terms.size(); ++k) sum = sum + terms[k];
    return sum;
}

Expr SolutionFamily::derivativeIdentity() const {
    if (crossCoefficient) throw InvalidInput("the derivative identity applies to f^m + g^n = 1 only");
    const Expr df = f.derivative();
    const Expr dg = g.derivative();
    return num(m) * Expr::pow(f, m - 1) * df + num(n) * Expr::pow(g, n - 1) * dg;
}

SolutionFamily buildCaseI(AlphaKind alpha, const FamilyParams& params) {
    SolutionFamily fam;
    fam.id = "case1";
    fam.title = "Case I: m = n = 2, rational parametrization in alpha";
    fam.m = fam.n = 2;
    fam.params = params;
    fam.params.alpha = alpha;
    const Expr b = beta(params);
    Expr a;
    switch (alpha) {
        case AlphaKind::Exp:
            a = Expr::exp(b);
            break;
        case AlphaKind::Identity:
            a = b;
            break;
        case AlphaKind::TanHalf: {
            // tan(β/2) = −i(e^{iβ} − 1)/(e^{iβ} + 1)
            const Expr i = Expr::exactConstant(RationalComplex::i());
            const Expr e = Expr::exp(i * b);
            a = -i * (e - num(1)) / (e + num(1));
            break;
        }
        case AlphaKind::Constant:
            a = numberExpr(params.alphaConstant);
            fam.degenerate = true;
            break;
    }
    const Expr a2 = Expr::pow(a, 2);
    fam.f = (num(1) - a2) / (num(1) + a2);
    fam.g = num(2) * a / (num(1) + a2);
    fam.paramList = {{"alpha", toString(alpha)}, {"beta", toString(params.beta)}};
    if (alpha == AlphaKind::Constant) fam.paramList.emplace_back("alpha_value", numberText(params.alphaConstant));
    const Polynomial A = Polynomial::variable();
    const Polynomial one = Polynomial::constant(RationalComplex(1));
    const Polynomial even = (one - A * A) * (one - A * A) + RationalComplex(4) * A * A - (one + A * A) * (one + A * A);
    fam.rationalized = WpQuotientPoly(even, Polynomial(), Polynomial());
    fam.rationalizedVariable = "alpha";
    fam.rationalizationNote = "Multiply f^2 + g^2 - 1 by (1 + alpha^2)^2: (1 - alpha^2)^2 + 4 alpha^2 - (1 + alpha^2)^2, a polynomial in alpha.";
    fam.printedForm = "f = (1 - alpha^2)/(1 + alpha^2), g = 2 alpha/(1 + alpha^2)";
    return fam;
}

SolutionFamily buildCaseII(int etaIndex, const FamilyParams& params) {
    SolutionFamily fam;
    fam.id = "case2";
    fam.title = "Case II: m = n = 3, equianharmonic wp";
    fam.m = fam.n = 3;
    fam.params = params;
    fam.params.etaIndex = etaIndex;
    const wp::Invariants standard = wp::invariantsFromCase(wp::CaseId::II);
    attachEngine(fam, standard);
    fam.paramList.insert(fam.paramList.begin(), {"eta", std::to_string(etaIndex)});
    const Expr b = beta(params);
    const Expr P = Expr::wp(fam.engine, b);
    const Expr X = Expr::wpPrime(fam.engine, b);
    fam.f = (num(3) + sqrt3() * X) / (num(6) * P);
    fam.g = eta(etaIndex) * (num(3) - sqrt3() * X) / (num(6) * P);
    const Polynomial cubic = cubicOf(*fam.invariants);
    if (!cubic.isZero()) {
        const auto Pq = WpQuotientPoly::p(cubic);
        const auto Xq = WpQuotientPoly::x(cubic);
        // (3 + √3X)³ + (3 − √3X)³ = 54 + 54X²; η³ = 1; (6P)³ = 216P³.
        fam.rationalized = WpQuotientPoly::constant(RationalComplex(54), cubic) + RationalComplex(54) * (Xq * Xq) -
                           RationalComplex(216) * Pq.pow(3);
    }
    fam.rationalizationNote =
        "Multiply f^3 + g^3 - 1 by (6P)^3. The odd powers of sqrt(3)X cancel between (3 + sqrt(3)X)^3 and "
        "(3 - sqrt(3)X)^3, and eta^3 = 1, leaving 54 + 54X^2 - 216P^3; reduce X^2 -> 4P^3 - 1.";
    fam.printedForm = "f = (3 + sqrt(3) wp'(beta))/(6 wp(beta)), g = eta (3 - sqrt(3) wp'(beta))/(6 wp(beta))";
    return fam;
}

SolutionFamily buildCaseIII(int etaIndex, const FamilyParams& params) {
    SolutionFamily fam;
    fam.id = "case3";
    fam.title = "Case III: m = 2, n = 3";
    fam.m = 2;
    fam.n = 3;
    fam.params = params;
    fam.params.etaIndex = etaIndex;
    attachEngine(fam, wp::invariantsFromCase(wp::CaseId::III));
    fam.paramList.insert(fam.paramList.begin(), {"eta", std::to_string(etaIndex)});
    const Expr b = beta(params);
    const Expr P = Expr::wp(fam.engine, b);
    const Expr X = Expr::wpPrime(fam.engine, b);
    fam.f = Expr::exactConstant(RationalComplex::i(), "i") * X;
    fam.g = eta(etaIndex) * cbrt4() * P;
    const Polynomial cubic = cubicOf(*fam.invariants);
    if (!cubic.isZero()) {
        const auto Pq = WpQuotientPoly::p(cubic);
        const auto Xq = WpQuotientPoly::x(cubic);
        // i² = −1, (η∛4)³ = 4.
        fam.rationalized = -(Xq * Xq) + RationalComplex(4) * Pq.pow(3) - RationalComplex(1);
    }
    fam.rationalizationNote = "i^2 = -1 and (eta cbrt(4))^3 = 4 give -X^2 + 4P^3 - 1; reduce X^2 -> 4P^3 - 1.";
    fam.printedForm = "f = i wp'(beta), g = eta cbrt(4) wp(beta)";
    return fam;
}

SolutionFamily buildCaseV(int etaIndex, const FamilyParams& params) {
    SolutionFamily fam = buildCaseIII(etaIndex, params);
    fam.id = "case5";
    fam.title = "Case V: m = 3, n = 2 (case III with f and g swapped)";
    std::swap(fam.f, fam.g);
    std::swap(fam.m, fam.n);
    fam.printedForm = "f = eta cbrt(4) wp(beta), g = i wp'(beta)";
    return fam;
}

SolutionFamily buildCaseIV(int variant, int zetaIndex, const FamilyParams& params) {
    if (variant != 1 && variant != 2) throw InvalidInput("case IV variant must be 1 or 2");
    SolutionFamily fam;
    fam.id = "case4";
    fam.title = "Case IV: m = 2, n = 4, variant " + std::to_string(variant);
    fam.m = 2;
    fam.n = 4;
    fam.params = params;
    fam.params.variant = variant;
    fam.params.zetaIndex = zetaIndex;
    attachEngine(fam, wp::invariantsFromCase(wp::CaseId::IV));
    fam.paramList.insert(fam.paramList.begin(), {"zeta", std::to_string(zetaIndex)});
    fam.paramList.insert(fam.paramList.begin(), {"variant", std::to_string(variant)});
    const Expr b = beta(params);
    const Expr P = Expr::wp(fam.engine, b);
    const Expr X = Expr::wpPrime(fam.engine, b);
    const Expr P3 = Expr::pow(P, 3);
    const Expr i = Expr::exactConstant(RationalComplex::i(), "i");
    if (variant == 1) {
        fam.f = (num(-4) * P3 + num(1, 12) * P + num(1, 3)) / (num(4) * P3 + num(1, 12) * P + num(1, 6));
        fam.g = num(2) * zeta(zetaIndex) * P / X;
        fam.printedForm = "f1 = (-4 wp^3 + wp/12 + 1/3)/(4 wp^3 + wp/12 + 1/6), g1 = 2 zeta wp/wp'";
    } else {
        fam.f = i * (num(4) * P3 - num(1, 12) * P - num(1, 3)) / (num(4) * Expr::pow(P, 2));
        fam.g = zeta(zetaIndex) * i * X / (num(2) * P);
        fam.printedForm = "f2 = i (4 wp^3 - wp/12 - 1/3)/(4 wp^2), g2 = zeta i wp'/(2 wp)";
    }
    const Polynomial cubic = cubicOf(*fam.invariants);
    if (!cubic.isZero()) {
        const auto Pq = WpQuotientPoly::p(cubic);
        const auto Xq = WpQuotientPoly::x(cubic);
        const auto c = [&](long p, long q) { return WpQuotientPoly::constant(RationalComplex::fraction(p, q), cubic); };
        const auto X4 = Xq.pow(4);
        if (variant == 1) {
            const auto N = RationalComplex(-4) * Pq.pow(3) + RationalComplex::fraction(1, 12) * Pq + c(1, 3);
            // f² + g⁴ − 1 = N²/D² + 16P⁴/X⁴ − 1 with X² = D; clear by X⁴ = D².
            fam.rationalized = N * N + RationalComplex(16) * Pq.pow(4) - X4;
        } else {
            const auto M = RationalComplex(4) * Pq.pow(3) - RationalComplex::fraction(1, 12) * Pq - c(1, 3);
            // f² + g⁴ − 1 = (−M² + X⁴ − 16P⁴)/(16P⁴).
            fam.rationalized = X4 - M * M - RationalComplex(16) * Pq.pow(4);
        }
    }
    fam.rationalizationNote =
        variant == 1 ? "With D = 4P^3 + P/12 + 1/6 = X^2 and N = -4P^3 + P/12 + 1/3, multiply f^2 + g^4 - 1 by "
                       "X^4 = D^2 (zeta^4 = 1): N^2 + 16P^4 - D^2."
                     : "With M = 4P^3 - P/12 - 1/3, multiply f^2 + g^4 - 1 by 16P^4 (i^2 = -1, (zeta i)^4 = 1): "
                       "X^4 - M^2 - 16P^4 = D^2 - M^2 - 16P^4.";
    return fam;
}

SolutionFamily buildCaseVI(int variant, int zetaIndex, const FamilyParams& params) {
    SolutionFamily fam = buildCaseIV(variant, zetaIndex, params);
    fam.id = "case6";
    fam.title = "Case VI: m = 4, n = 2 (case IV variant " + std::to_string(variant) + " with f and g swapped)";
    std::swap(fam.f, fam.g);
    std::swap(fam.m, fam.n);
    return fam;
}

SolutionFamily buildQuadratic(const ParsedNumber& rho, SignConvention sign, const FamilyParams& params) {
    const Complex r = rho.value;
    const bool exact_rho = rho.exact.has_value();
    if (exact_rho ? (rho.exact->pow(2) == RationalComplex(1)) : (std::abs(r * r - 1.0) < 1e-14)) {
        throw HypothesisViolation("rho^2 = 1 violates the hypothesis rho^2 != 1");
    }
    SolutionFamily fam;
    fam.id = "quadratic";
    fam.title = "Quadratic: f^2 " + std::string(sign == SignConvention::Plus ? "+" : "-") + " 2 rho f g + g^2 = 1";
    fam.kind = EquationKind::Quadratic;
    fam.m = fam.n = 2;
    fam.params = params;
    fam.params.rho = rho;
    fam.params.sign = sign;
    fam.paramList = {{"rho", numberText(rho)}, {"sign", toString(sign)}, {"beta", toString(params.beta)}};

    std::optional<RationalComplex> exact_root;
    if (exact_rho) exact_root = exactSqrt(rho.exact->pow(2) - RationalComplex(1));
    Expr rho1;
    Expr rho2;
    std::optional<RationalComplex> e1;
    std::optional<RationalComplex> e2;
    if (exact_root) {
        e1 = *rho.exact + *exact_root;
        e2 = *rho.exact - *exact_root;
        rho1 = Expr::exactConstant(*e1);
        rho2 = Expr::exactConstant(*e2);
    } else {
        const Complex root = std::sqrt(r * r - 1.0);
        rho1 = Expr::constant(r + root, "rho1");
        rho2 = Expr::constant(r - root, "rho2");
    }
    const Expr h = Expr::exp(beta(params));
    const Expr h2 = Expr::pow(h, 2);
    const Expr ratio = rho1 / rho2;
    fam.h = h;
    fam.f = (h2 - ratio) / ((num(1) - ratio) * h);
    fam.g = (h2 - num(1)) / ((rho1 - rho2) * h);
    const Expr two_rho = num(2) * numberExpr(rho);
    fam.crossCoefficient = sign == SignConvention::Plus ? two_rho : -two_rho;
    if (e1 && e2) {
        // Multiply by s²t²h² with s = ρ₁ − ρ₂, t = 1 − ρ₁/ρ₂.
        const RationalComplex s = *e1 - *e2;
        const RationalComplex t = RationalComplex(1) - *e1 / *e2;
        const RationalComplex c = (sign == SignConvention::Plus ? RationalComplex(2) : RationalComplex(-2)) * *rho.exact;
        const Polynomial H = Polynomial::variable();
        const Polynomial H2 = H * H;
        const Polynomial one = Polynomial::constant(RationalComplex(1));
        const Polynomial fnum = H2 - Polynomial::constant(*e1 / *e2);
        const Polynomial gnum = H2 - one;
        const Polynomial even = (s * s) * (fnum * fnum) + (c * s * t) * (fnum * gnum) + (t * t) * (gnum * gnum) -
                                (s * s * t * t) * H2;
        fam.rationalized = WpQuotientPoly(even, Polynomial(), Polynomial());
        fam.rationalizedVariable = "h";
    }
    fam.rationalizationNote =
        "With s = rho1 - rho2 and t = 1 - rho1/rho2, multiply the residual by s^2 t^2 h^2: a polynomial in h "
        "(available when sqrt(rho^2 - 1) is rational-complex).";
    fam.printedForm = "f = (h^2 - rho1/rho2)/((1 - rho1/rho2) h), g = (h^2 - 1)/((rho1 - rho2) h), h = exp(beta)";
    return fam;
}

SolutionFamily buildCubic(const ParsedNumber& tau, const FamilyParams& params) {
    const wp::Invariants standard = wp::invariantsFromTau(tau.value, tau.exact);
    SolutionFamily fam;
    fam.id = "cubic";
    fam.title = "Cubic: f^3 - 3 tau f g + g^3 = 1";
    fam.kind = EquationKind::Cubic;
    fam.m = fam.n = 3;
    fam.params = params;
    fam.params.tau = tau;
    attachEngine(fam, standard);
    fam.paramList.insert(fam.paramList.begin(), {"tau", numberText(tau)});
    const Expr t = numberExpr(tau);
    const Expr b = beta(params);
    const Expr P = Expr::wp(fam.engine, b);
    const Expr X = Expr::wpPrime(fam.engine, b);
    const Expr numerator_even = num(-3) * t * cbrt4() * P + num(36) + num(9) * Expr::pow(t, 3);
    const Expr denominator = num(6) * (cbrt4() * P + num(9) * Expr::pow(t, 2));
    fam.f = (numerator_even + X) / denominator;
    fam.g = (numerator_even - X) / denominator;
    fam.crossCoefficient = num(-3) * t;
    fam.printedForm =
        "f = (-3 tau cbrt(4) wp + 36 + 9 tau^3 + wp')/(6 (cbrt(4) wp + 9 tau^2)), g = same with -wp'";
    if (tau.exact && tau.exact->isZero()) {
        const Polynomial cubic = cubicOf(*fam.invariants);
        if (!cubic.isZero()) {
            const auto Pq = WpQuotientPoly::p(cubic);
            const auto Xq = WpQuotientPoly::x(cubic);
            // (36 + X)³ + (36 − X)³ = 2·36³ + 6·36·X²; denominator (6∛4P)³ = 864P³.
            fam.rationalized = WpQuotientPoly::constant(RationalComplex(93312), cubic) + RationalComplex(216) * (Xq * Xq) -
                               RationalComplex(864) * Pq.pow(3);
        }
        fam.rationalizationNote =
            "tau = 0: multiply by (6 cbrt(4) P)^3 = 864P^3; the odd powers of X cancel, leaving "
            "93312 + 216X^2 - 864P^3; reduce X^2 -> 4P^3 - 432.";
    } else if (tau.exact && !params.invariantsOverride) {
        // In Q = ∛4·℘ every ∛4 disappears: 4℘³ = Q³ and ∛4℘ = Q.
        const RationalComplex tv = *tau.exact;
        const RationalComplex t3 = tv.pow(3);
        const Polynomial Q = Polynomial::variable();
        const Polynomial cubic = Q * Q * Q + Polynomial::constant(RationalComplex(27) * tv * (RationalComplex(8) - t3)) * Q +
                                 Polynomial::constant(RationalComplex(54) * (t3 * t3 + RationalComplex(20) * t3 - RationalComplex(8)));
        const auto Qq = WpQuotientPoly::p(cubic);
        const auto Xq = WpQuotientPoly::x(cubic);
        const auto A = RationalComplex(-3) * tv * Qq + (RationalComplex(36) + RationalComplex(9) * t3);
        const auto B = RationalComplex(6) * (Qq + RationalComplex(9) * tv * tv);
        const auto X2 = Xq * Xq;
        fam.rationalized = RationalComplex(2) * A.pow(3) + RationalComplex(6) * (A * X2) -
                           RationalComplex(3) * tv * ((A * A - X2) * B) - B.pow(3);
        fam.rationalizedVariable = "Q";
        fam.rationalizationNote =
            "Write Q = cbrt(4) wp, so that X^2 = Q^3 + 27 tau (8 - tau^3) Q + 54 (tau^6 + 20 tau^3 - 8). With "
            "A = -3 tau Q + 36 + 9 tau^3 and B = 6 (Q + 9 tau^2), f = (A + X)/B and g = (A - X)/B; multiply by B^3: "
            "2A^3 + 6A X^2 - 3 tau (A^2 - X^2) B - B^3.";
    } else {
        fam.rationalizationNote = "tau is not rational-complex; only the floating series and numeric routes apply.";
    }
    return fam;
}

SolutionFamily buildUnitUnit(const FamilyParams& params) {
    SolutionFamily fam;
    fam.id = "unit-unit";
    fam.title = "Exponential pair with m = n = 1 and no zeros";
    fam.m = fam.n = 1;
    fam.params = params;
    fam.paramList = {{"beta", toString(params.beta)}};
    const Expr e = Expr::exp(beta(params));
    fam.f = num(1) / (num(1) + e);
    fam.g = e / (num(1) + e);
    const Polynomial E = Polynomial::variable();
    const Polynomial one = Polynomial::constant(RationalComplex(1));
    fam.rationalized = WpQuotientPoly(one + E - (one + E), Polynomial(), Polynomial());
    fam.rationalizedVariable = "E";
    fam.rationalizationNote = "With E = exp(w), multiply f + g - 1 by 1 + E: 1 + E - (1 + E).";
    fam.printedForm = "f = 1/(1 + e^w), g = e^w/(1 + e^w)";
    return fam;
}

SolutionFamily buildMOne(int m, const FamilyParams& params) {
    if (m < 1) throw InvalidInput("m must be at least 1");
    SolutionFamily fam;
    fam.id = "m-one";
    fam.title = "Exponential pair with n = 1: f = e^w, g = 1 - e^{mw}";
    fam.m = m;
    fam.n = 1;
    fam.params = params;
    fam.params.m = m;
    fam.paramList = {{"m", std::to_string(m)}, {"beta", toString(params.beta)}};
    const Expr b = beta(params);
    fam.f = Expr::exp(b);
    fam.g = num(1) - Expr::exp(num(m) * b);
    const Polynomial E = Polynomial::variable();
    const Polynomial one = Polynomial::constant(RationalComplex(1));
    fam.rationalized = WpQuotientPoly(E.pow(m) + (one - E.pow(m)) - one, Polynomial(), Polynomial());
    fam.rationalizedVariable = "E";
    fam.rationalizationNote = "With E = exp(w), e^{mw} = E^m: E^m + (1 - E^m) - 1.";
    fam.printedForm = "f = e^w, g = 1 - e^{mw}";
    return fam;
}

SolutionFamily buildPicardPair(int m, int n, const ParsedNumber& gamma, const FamilyParams& params) {
    if (m < 1 || n < 1) throw InvalidInput("m and n must be at least 1");
    const Complex eg = std::exp(gamma.value);
    if (std::abs(1.0 - eg) < 1e-14) throw InvalidInput("exp(gamma) = 1 leaves no logarithm for 1 - exp(gamma)");
    SolutionFamily fam;
    fam.id = "picard-pair";
    fam.title = "Constant pair from H = e^gamma, 1 - H = e^delta";
    fam.m = m;
    fam.n = n;
    fam.params = params;
    fam.params.m = m;
    fam.params.n = n;
    fam.params.gamma = gamma;
    fam.degenerate = true;
    const Complex delta = std::log(1.0 - eg);
    fam.paramList = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"gamma", numberText(gamma)},
                     {"delta", numberText({delta, {}})}};
    fam.f = Expr::constant(std::exp(gamma.value / static_cast<double>(m)), "exp(gamma/m)");
    fam.g = Expr::constant(std::exp(delta / static_cast<double>(n)), "exp(delta/n)");
    fam.rationalizationNote = "Constants only: e^gamma + (1 - e^gamma) - 1 vanishes; checked in floating point.";
    fam.printedForm = "f = e^{gamma/m}, g = e^{delta/n} with e^gamma + e^delta = 1";
    return fam;
}

SolutionFamily buildCorollaryWitness(const FamilyParams& params) {
    if (params.ell != 1) throw InvalidInput("only ell = 1 has a witness; ell >= 2 is not constructed");
    if (params.beta != BetaKind::Identity) throw InvalidInput("the corollary witness is stated for beta = identity only");
    SolutionFamily fam;
    fam.id = "corollary";
    fam.title = "Witness for f^m + h^n (f')^{ell n} = 1 with m = n = 2, ell = 1";
    fam.kind = EquationKind::Corollary;
    fam.m = fam.n = 2;
    fam.ell = 1;
    fam.params = params;
    fam.paramList = {{"ell", "1"}};
    const Expr e2 = Expr::exp(num(2) * Expr::variable());
    fam.f = (num(1) - e2) / (num(1) + e2);
    fam.h = (num(1) + e2) / (num(2) * Expr::exp(Expr::variable()));
    fam.g = *fam.h * fam.f.derivative();
    const Polynomial E = Polynomial::variable();
    const Polynomial one = Polynomial::constant(RationalComplex(1));
    fam.rationalized = WpQuotientPoly((one - E * E) * (one - E * E) + RationalComplex(4) * E * E - (one + E * E) * (one + E * E),
                                      Polynomial(), Polynomial());
    fam.rationalizedVariable = "E";
    fam.rationalizationNote =
        "With E = exp(w): f' = -4E^2/(1 + E^2)^2, so h f' = -2E/(1 + E^2) and the residual times (1 + E^2)^2 is "
        "(1 - E^2)^2 + 4E^2 - (1 + E^2)^2.";
    fam.printedForm = "f = (1 - e^{2w})/(1 + e^{2w}), h = (1 + e^{2w})/(2 e^w), g = h f'";
    return fam;
}

const std::vector<std::string>& familyIds() {
    static const std::vector<std::string> ids{"case1", "case2",     "case3", "case4",       "case5",     "case6",    "quadratic",
                                              "cubic", "unit-unit", "m-one", "picard-pair", "corollary", "exp-pair"};
    return ids;
}

SolutionFamily buildFamily(const std::string& id, const FamilyParams& params) {
    if (id == "case1") return buildCaseI(params.alpha, params);
    if (id == "case2") return buildCaseII(params.etaIndex, params);
    if (id == "case3") return buildCaseIII(params.etaIndex, params);
    if (id == "case5") return buildCaseV(params.etaIndex, params);
    if (id == "case4") return buildCaseIV(params.variant, params.zetaIndex, params);
    if (id == "case6") return buildCaseVI(params.variant, params.zetaIndex, params);
    if (id == "quadratic") return buildQuadratic(params.rho, params.sign, params);
    if (id == "cubic") return buildCubic(params.tau, params);
    if (id == "unit-unit") return buildUnitUnit(params);
    if (id == "m-one") return buildMOne(params.m, params);
    if (id == "picard-pair") return buildPicardPair(params.m, params.n, params.gamma, params);
    if (id == "corollary") return buildCorollaryWitness(params);
    if (id == "exp-pair") {
        SolutionFamily fam = buildCaseI(AlphaKind::Exp, params);
        fam.id = "exp-pair";
        fam.title = "Case I pair with alpha = e^w (f' has no zeros, g' vanishes where e^{2w} = 1)";
        return fam;
    }
    throw InvalidInput("unknown family id '" + id + "'");
}

}  // namespace fermatlab::families

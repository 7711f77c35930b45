#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermatlab/families/expr.hpp"
#include "fermatlab/symbolic/quotient.hpp"
#include "fermatlab/wp/invariants.hpp"
#include "fermatlab/wp/weierstrass.hpp"

namespace fermatlab::families {

enum class EquationKind { Fermat, Quadratic, Cubic, Corollary };
enum class AlphaKind { Exp, Identity, TanHalf, Constant };
enum class BetaKind { Identity, Exp };
enum class SignConvention { Plus, Minus };

std::string toString(EquationKind kind);
std::string toString(AlphaKind kind);
std::string toString(BetaKind kind);
std::string toString(SignConvention sign);
AlphaKind parseAlphaKind(const std::string& text);
BetaKind parseBetaKind(const std::string& text);
SignConvention parseSignConvention(const std::string& text);

struct FamilyParams {
    int etaIndex = 0;
    int zetaIndex = 0;
    int variant = 1;
    ParsedNumber rho{Complex(1.25, 0.0), RationalComplex::fraction(5, 4)};
    ParsedNumber tau{Complex(0.0, 0.0), RationalComplex(0)};
    int ell = 1;
    SignConvention sign = SignConvention::Plus;
    AlphaKind alpha = AlphaKind::Exp;
    ParsedNumber alphaConstant{Complex(2.0, 0.0), RationalComplex(2)};
    BetaKind beta = BetaKind::Identity;
    int m = 3;  // m-one, picard-pair
    int n = 2;  // picard-pair
    ParsedNumber gamma{Complex(0.5, 0.5), RationalComplex(Rational(1, 2), Rational(1, 2))};
    /// Replaces the ℘ invariants of a ℘-family (used to corrupt them on purpose).
    std::optional<wp::Invariants> invariantsOverride;
};

/// A constructed solution pair for one equation form.
///
/// `g` is the second unknown of the equation; for the corollary witness it is
/// h·(f′)^ℓ so that every kind reads f^m + g^n (+ cross term) = 1.
struct SolutionFamily {
    std::string id;
    std::string title;
    int m = 1;
    int n = 1;
    int ell = 1;
    EquationKind kind = EquationKind::Fermat;
    Expr f;
    Expr g;
    std::optional<Expr> h;
    /// c in f² + c·fg + g² − 1 (quadratic) or f³ + c·fg + g³ − 1 (cubic).
    std::optional<Expr> crossCoefficient;
    FamilyParams params;
    std::vector<std::pair<std::string, std::string>> paramList;
    std::optional<wp::Invariants> invariants;
    std::shared_ptr<const wp::Weierstrass> engine;
    /// Denominator-cleared residual in Q(i)[P, X]/(X² − cubic).
    std::optional<symbolic::WpQuotientPoly> rationalized;
    std::string rationalizedVariable = "P";
    std::string rationalizationNote;
    std::string printedForm;
    bool degenerate = false;

    /// Terms whose sum is the equation residual.
    std::vector<Expr> residualTerms() const;
    Expr residual() const;
    /// m f^{m−1} f′ + n g^{n−1} g′ (Fermat and corollary kinds).
    Expr derivativeIdentity() const;
    bool usesWp() const { return engine != nullptr; }
};

SolutionFamily buildCaseI(AlphaKind alpha, const FamilyParams& params = {});
SolutionFamily buildCaseII(int etaIndex, const FamilyParams& params = {});
SolutionFamily buildCaseIII(int etaIndex, const FamilyParams& params = {});
/// Case III with f and g swapped, (m, n) = (3, 2).
SolutionFamily buildCaseV(int etaIndex, const FamilyParams& params = {});
SolutionFamily buildCaseIV(int variant, int zetaIndex, const FamilyParams& params = {});
/// Case IV with f and g swapped, (m, n) = (4, 2).
SolutionFamily buildCaseVI(int variant, int zetaIndex, const FamilyParams& params = {});
/// Throws HypothesisViolation when ρ² = 1.
SolutionFamily buildQuadratic(const ParsedNumber& rho, SignConvention sign, const FamilyParams& params = {});
/// Throws DegenerateLattice when τ³ = −1.
SolutionFamily buildCubic(const ParsedNumber& tau, const FamilyParams& params = {});
SolutionFamily buildUnitUnit(const FamilyParams& params = {});
SolutionFamily buildMOne(int m, const FamilyParams& params = {});
SolutionFamily buildPicardPair(int m, int n, const ParsedNumber& gamma, const FamilyParams& params = {});
SolutionFamily buildCorollaryWitness(const FamilyParams& params = {});

/// Dispatch on a family id ("case1" … "case6", "quadratic", "cubic",
/// "unit-unit", "m-one", "picard-pair", "corollary", "exp-pair").
SolutionFamily buildFamily(const std::string& id, const FamilyParams& params);
const std::vector<std::string>& familyIds();

}  // namespace fermatlab::families

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fermatlab/scalars.hpp"
#include "fermatlab/simd/kernels.hpp"
#include "fermatlab/symbolic/laurent.hpp"
#include "fermatlab/wp/weierstrass.hpp"

namespace fermatlab::families {

enum class NodeKind { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow, Exp, Wp, WpPrime };

struct Node;

/// Immutable closed-form expression in one complex variable w.
///
/// Nodes are shared, so derivatives and substitutions reuse subtrees; every
/// evaluator below memoizes on node identity.
class Expr {
public:
    Expr() = default;

    static Expr constant(Complex value, std::string label = {});
    static Expr exactConstant(const RationalComplex& value, std::string label = {});
    static Expr variable();
    static Expr wp(std::shared_ptr<const wp::Weierstrass> engine, const Expr& argument);
    static Expr wpPrime(std::shared_ptr<const wp::Weierstrass> engine, const Expr& argument);
    static Expr exp(const Expr& argument);
    static Expr pow(const Expr& base, int exponent);

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a);

    bool valid() const { return node_ != nullptr; }
    NodeKind kind() const;
    const Node* node() const { return node_.get(); }

    /// True when no Variable node occurs.
    bool isConstant() const;
    /// Exact value of a constant tree built from exact leaves, if any.
    std::optional<RationalComplex> exactValue() const;

    /// d/dw with ℘′′ = 6℘² − g₂/2 and the chain rule.
    Expr derivative() const;
    /// Replaces the variable w by `inner`.
    Expr substitute(const Expr& inner) const;

    /// Pointwise value; NaN when the point hits a hard pole.
    Complex evaluate(Complex w) const;

    std::string toString() const;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;

    friend struct Node;
    friend class BatchEvaluator;
    template <class C>
    friend class SeriesEvaluator;
};

struct Node {
    NodeKind kind;
    Complex value{};                               // Constant
    std::optional<RationalComplex> exact;          // Constant
    std::string label;                             // Constant display name
    int exponent = 0;                              // Pow
    std::shared_ptr<const wp::Weierstrass> engine;  // Wp, WpPrime
    Expr a;
    Expr b;
};

/// Per-point pole bookkeeping gathered while evaluating.
struct EvalGuards {
    std::vector<double> minDenominator;       // smallest |denominator| (base of a power denominator)
    std::vector<double> maxWp;                // largest |℘| among ℘ nodes
    std::vector<double> minLatticeDistance;   // distance of ℘ arguments to the lattice
    std::vector<std::uint8_t> pole;           // hard pole hit or non-finite value

    explicit EvalGuards(std::size_t n = 0);
};

/// Evaluates any number of expressions on one batch of points, sharing work
/// between common subtrees.
class BatchEvaluator {
public:
    explicit BatchEvaluator(simd::ComplexArray points);

    const simd::ComplexArray& evaluate(const Expr& e);
    const EvalGuards& guards() const { return guards_; }
    const simd::ComplexArray& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    const wp::Weierstrass::Batch& wpBatch(const Node& node);
    void noteDenominator(const Expr& denominator);

    simd::ComplexArray points_;
    EvalGuards guards_;
    std::unordered_map<const Node*, simd::ComplexArray> memo_;
    std::map<std::pair<const wp::Weierstrass*, const Node*>, wp::Weierstrass::Batch> wpMemo_;
    std::vector<std::shared_ptr<const Node>> keepAlive_;
};

/// Laurent expansion about w = 0.
///
/// Exact mode (RationalComplex) throws NotExact on constants without a value
/// in Q(i) and on exp of a series with nonzero constant term. Both modes throw
/// InvalidInput when a ℘ argument does not vanish at 0.
template <class C>
class SeriesEvaluator {
public:
    /// Expansions of exp and ℘ are cut at w^workingPrecision; constants and
    /// the variable itself are exact.
    explicit SeriesEvaluator(int workingPrecision) : variablePrecision_(workingPrecision) {}

    symbolic::LaurentSeries<C> evaluate(const Expr& e);

private:
    int variablePrecision_;
    std::unordered_map<const Node*, symbolic::LaurentSeries<C>> memo_;
    std::vector<std::shared_ptr<const Node>> keepAlive_;
};

/// Series of `e` known through exponent `order`; raises the working precision
/// until the result is.
template <class C>
symbolic::LaurentSeries<C> seriesThrough(const Expr& e, int order);

}  // namespace fermatlab::families

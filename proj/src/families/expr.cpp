#include "fermatlab/families/expr.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fermatlab/errors.hpp"
#include "fermatlab/symbolic/wp_series.hpp"

namespace fermatlab::families {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

std::shared_ptr<Node> makeNode(NodeKind kind) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    return n;
}

bool isExactConstant(const Expr& e, long value) {
    if (!e.valid() || e.kind() != NodeKind::Constant) return false;
    return e.node()->exact && *e.node()->exact == RationalComplex(value);
}

std::string formatComplex(Complex z) {
    std::ostringstream out;
    out.precision(17);
    if (z.imag() == 0.0) {
        out << z.real();
    } else {
        out << "(" << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i)";
    }
    return out.str();
}

int precedence(NodeKind kind) {
    switch (kind) {
        case NodeKind::Add:
        case NodeKind::Sub:
            return 1;
        case NodeKind::Mul:
        case NodeKind::Div:
            return 2;
        case NodeKind::Neg:
            return 3;
        case NodeKind::Pow:
            return 4;
        default:
            return 5;
    }
}

std::string render(const Expr& e, int parent) {
    const Node& n = *e.node();
    std::string s;
    switch (n.kind) {
        case NodeKind::Constant:
            if (!n.label.empty()) {
                s = n.label;
            } else if (n.exact) {
                const std::string t = n.exact->toString();
                s = (t.find_first_of("+-/", 1) != std::string::npos || t[0] == '-') ? "(" + t + ")" : t;
            } else {
                s = formatComplex(n.value);
            }
            return s;
        case NodeKind::Variable:
            return "w";
        case NodeKind::Add:
            s = render(n.a, 1) + " + " + render(n.b, 1);
            break;
        case NodeKind::Sub:
            s = render(n.a, 1) + " - " + render(n.b, 2);
            break;
        case NodeKind::Mul:
            s = render(n.a, 2) + "*" + render(n.b, 3);
            break;
        case NodeKind::Div:
            s = render(n.a, 2) + "/" + render(n.b, 3);
            break;
        case NodeKind::Neg:
            s = "-" + render(n.a, 3);
            break;
        case NodeKind::Pow:
            s = render(n.a, 5) + "^" + (n.exponent < 0 ? "(" + std::to_string(n.exponent) + ")" : std::to_string(n.exponent));
            break;
        case NodeKind::Exp:
            return "exp(" + render(n.a, 0) + ")";
        case NodeKind::Wp:
            return "wp(" + render(n.a, 0) + ")";
        case NodeKind::WpPrime:
            return "wp'(" + render(n.a, 0) + ")";
    }
    if (precedence(n.kind) < parent) return "(" + s + ")";
    return s;
}

}  // namespace

Expr Expr::constant(Complex value, std::string label) {
    auto n = makeNode(NodeKind::Constant);
    n->value = value;
    n->label = std::move(label);
    return Expr(std::move(n));
}

Expr Expr::exactConstant(const RationalComplex& value, std::string label) {
    auto n = makeNode(NodeKind::Constant);
    n->value = value.toComplex();
    n->exact = value;
    n->label = std::move(label);
    return Expr(std::move(n));
}

Expr Expr::variable() {
    static const Expr w(makeNode(NodeKind::Variable));
    return w;
}

Expr Expr::wp(std::shared_ptr<const wp::Weierstrass> engine, const Expr& argument) {
    auto n = makeNode(NodeKind::Wp);
    n->engine = std::move(engine);
    n->a = argument;
    return Expr(std::move(n));
}

Expr Expr::wpPrime(std::shared_ptr<const wp::Weierstrass> engine, const Expr& argument) {
    auto n = makeNode(NodeKind::WpPrime);
    n->engine = std::move(engine);
    n->a = argument;
    return Expr(std::move(n));
}

Expr Expr::exp(const Expr& argument) {
    auto n = makeNode(NodeKind::Exp);
    n->a = argument;
    return Expr(std::move(n));
}

Expr Expr::pow(const Expr& base, int exponent) {
    if (exponent == 1) return base;
    if (exponent == 0) return exactConstant(RationalComplex(1));
    if (auto v = base.exactValue(); v && base.kind() == NodeKind::Constant && base.node()->label.empty()) {
        if (!(v->isZero() && exponent < 0)) return exactConstant(v->pow(exponent));
    }
    auto n = makeNode(NodeKind::Pow);
    n->a = base;
    n->exponent = exponent;
    return Expr(std::move(n));
}

Expr operator+(const Expr& a, const Expr& b) {
    if (isExactConstant(a, 0)) return b;
    if (isExactConstant(b, 0)) return a;
    const auto va = a.exactValue();
    const auto vb = b.exactValue();
    if (va && vb && a.kind() == NodeKind::Constant && b.kind() == NodeKind::Constant && a.node()->label.empty() &&
        b.node()->label.empty()) {
        return Expr::exactConstant(*va + *vb);
    }
    auto n = makeNode(NodeKind::Add);
    n->a = a;
    n->b = b;
    return Expr(std::move(n));
}

Expr operator-(const Expr& a, const Expr& b) {
    if (isExactConstant(b, 0)) return a;
    if (isExactConstant(a, 0)) return -b;
    const auto va = a.exactValue();
    const auto vb = b.exactValue();
    if (va && vb && a.kind() == NodeKind::Constant && b.kind() == NodeKind::Constant && a.node()->label.empty() &&
        b.node()->label.empty()) {
        return Expr::exactConstant(*va - *vb);
    }
    auto n = makeNode(NodeKind::Sub);
    n->a = a;
    n->b = b;
    return Expr(std::move(n));
}

Expr operator*(const Expr& a, const Expr& b) {
    if (isExactConstant(a, 0) || isExactConstant(b, 0)) return Expr::exactConstant(RationalComplex(0));
    if (isExactConstant(a, 1)) return b;
    if (isExactConstant(b, 1)) return a;
    const auto va = a.exactValue();
    const auto vb = b.exactValue();
    if (va && vb && a.kind() == NodeKind::Constant && b.kind() == NodeKind::Constant && a.node()->label.empty() &&
        b.node()->label.empty()) {
        return Expr::exactConstant(*va * *vb);
    }
    auto n = makeNode(NodeKind::Mul);
    n->a = a;
    n->b = b;
    return Expr(std::move(n));
}

Expr operator/(const Expr& a, const Expr& b) {
    if (isExactConstant(b, 1)) return a;
    if (isExactConstant(a, 0) && !isExactConstant(b, 0)) return a;
    auto n = makeNode(NodeKind::Div);
    n->a = a;
    n->b = b;
    return Expr(std::move(n));
}

Expr operator-(const Expr& a) {
    if (a.kind() == NodeKind::Constant && a.node()->exact && a.node()->label.empty()) return Expr::exactConstant(-*a.node()->exact);
    if (a.kind() == NodeKind::Neg) return a.node()->a;
    auto n = makeNode(NodeKind::Neg);
    n->a = a;
    return Expr(std::move(n));
}

NodeKind Expr::kind() const {
    if (!node_) throw InvalidInput("empty expression");
    return node_->kind;
}

bool Expr::isConstant() const {
    switch (kind()) {
        case NodeKind::Constant:
            return true;
        case NodeKind::Variable:
            return false;
        case NodeKind::Add:
        case NodeKind::Sub:
        case NodeKind::Mul:
        case NodeKind::Div:
            return node_->a.isConstant() && node_->b.isConstant();
        default:
            return node_->a.isConstant();
    }
}

std::optional<RationalComplex> Expr::exactValue() const {
    const Node& n = *node_;
    auto both = [&](auto op) -> std::optional<RationalComplex> {
        const auto a = n.a.exactValue();
        if (!a) return std::nullopt;
        const auto b = n.b.exactValue();
        if (!b) return std::nullopt;
        return op(*a, *b);
    };
    switch (n.kind) {
        case NodeKind::Constant:
            return n.exact;
        case NodeKind::Add:
            return both([](const RationalComplex& x, const RationalComplex& y) { return x + y; });
        case NodeKind::Sub:
            return both([](const RationalComplex& x, const RationalComplex& y) { return x - y; });
        case NodeKind::Mul:
            return both([](const RationalComplex& x, const RationalComplex& y) { return x * y; });
        case NodeKind::Div: {
            const auto b = n.b.exactValue();
            if (!b || b->isZero()) return std::nullopt;
            const auto a = n.a.exactValue();
            if (!a) return std::nullopt;
            return *a / *b;
        }
        case NodeKind::Neg: {
            const auto a = n.a.exactValue();
            if (!a) return std::nullopt;
            return -*a;
        }
        case NodeKind::Pow: {
            const auto a = n.a.exactValue();
            if (!a || (a->isZero() && n.exponent < 0)) return std::nullopt;
            return a->pow(n.exponent);
        }
        default:
            return std::nullopt;
    }
}

Expr Expr::derivative() const {
    const Node& n = *node_;
    const Expr zero = exactConstant(RationalComplex(0));
    switch (n.kind) {
        case NodeKind::Constant:
            return zero;
        case NodeKind::Variable:
            return exactConstant(RationalComplex(1));
        case NodeKind::Add:
            return n.a.derivative() + n.b.derivative();
        case NodeKind::Sub:
            return n.a.derivative() - n.b.derivative();
        case NodeKind::Mul:
            return n.a.derivative() * n.b + n.a * n.b.derivative();
        case NodeKind::Div:
            return (n.a.derivative() * n.b - n.a * n.b.derivative()) / pow(n.b, 2);
        case NodeKind::Neg:
            return -n.a.derivative();
        case NodeKind::Pow:
            return exactConstant(RationalComplex(n.exponent)) * pow(n.a, n.exponent - 1) * n.a.derivative();
        case NodeKind::Exp:
            return *this * n.a.derivative();
        case NodeKind::Wp:
            return wpPrime(n.engine, n.a) * n.a.derivative();
        case NodeKind::WpPrime: {
            // ℘″ = 6℘² − g₂/2
            const wp::Invariants& inv = n.engine->invariants();
            const Expr half_g2 = inv.exactG2 ? exactConstant(*inv.exactG2 / RationalComplex(2)) : constant(0.5 * inv.g2);
            const Expr second = exactConstant(RationalComplex(6)) * pow(wp(n.engine, n.a), 2) - half_g2;
            return second * n.a.derivative();
        }
    }
    throw InvalidInput("unknown expression node");
}

Expr Expr::substitute(const Expr& inner) const {
    std::unordered_map<const Node*, Expr> memo;
    auto go = [&](auto&& self, const Expr& e) -> Expr {
        if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
        const Node& n = *e.node();
        Expr r;
        switch (n.kind) {
            case NodeKind::Constant:
                r = e;
                break;
            case NodeKind::Variable:
                r = inner;
                break;
            case NodeKind::Add:
                r = self(self, n.a) + self(self, n.b);
                break;
            case NodeKind::Sub:
                r = self(self, n.a) - self(self, n.b);
                break;
            case NodeKind::Mul:
                r = self(self, n.a) * self(self, n.b);
                break;
            case NodeKind::Div:
                r = self(self, n.a) / self(self, n.b);
                break;
            case NodeKind::Neg:
                r = -self(self, n.a);
                break;
            case NodeKind::Pow:
                r = pow(self(self, n.a), n.exponent);
                break;
            case NodeKind::Exp:
                r = exp(self(self, n.a));
                break;
            case NodeKind::Wp:
                r = wp(n.engine, self(self, n.a));
                break;
            case NodeKind::WpPrime:
                r = wpPrime(n.engine, self(self, n.a));
                break;
        }
        memo.emplace(e.node(), r);
        return r;
    };
    return go(go, *this);
}

Complex Expr::evaluate(Complex w) const {
    BatchEvaluator ev(simd::ComplexArray(1, w));
    return ev.evaluate(*this).at(0);
}

std::string Expr::toString() const { return render(*this, 0); }

EvalGuards::EvalGuards(std::size_t n) : minDenominator(n, kInf), maxWp(n, 0.0), minLatticeDistance(n, kInf), pole(n, 0) {}

BatchEvaluator::BatchEvaluator(simd::ComplexArray points) : points_(std::move(points)), guards_(points_.size()) {}

void BatchEvaluator::noteDenominator(const Expr& denominator) {
    const Node& d = *denominator.node();
    const Expr& base = (d.kind == NodeKind::Pow && d.exponent > 0) ? d.a : denominator;
    const simd::ComplexArray& values = evaluate(base);
    const std::vector<double> mags = simd::modulus(values);
    for (std::size_t k = 0; k < mags.size(); ++k) {
        if (!(mags[k] >= guards_.minDenominator[k])) guards_.minDenominator[k] = mags[k];
    }
}

const wp::Weierstrass::Batch& BatchEvaluator::wpBatch(const Node& node) {
    const auto key = std::make_pair(node.engine.get(), node.a.node());
    if (auto it = wpMemo_.find(key); it != wpMemo_.end()) return it->second;
    simd::ComplexArray args = evaluate(node.a);
    std::vector<std::uint8_t> bad(args.size(), 0);
    for (std::size_t k = 0; k < args.size(); ++k) {
        const Complex z = args.at(k);
        if (!isFinite(z)) {
            bad[k] = 1;
            args.set(k, node.engine->halfPeriods().omega1);
            continue;
        }
        const double d = std::abs(node.engine->reduce(z));
        if (d < guards_.minLatticeDistance[k]) guards_.minLatticeDistance[k] = d;
    }
    wp::Weierstrass::Batch batch = node.engine->evaluate(args);
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (bad[k]) {
            batch.pole[k] = 1;
            batch.wp.set(k, {kNaN, kNaN});
            batch.wpPrime.set(k, {kNaN, kNaN});
        }
        if (batch.pole[k]) {
            guards_.pole[k] = 1;
        } else {
            guards_.maxWp[k] = std::max(guards_.maxWp[k], std::abs(batch.wp.at(k)));
        }
    }
    return wpMemo_.emplace(key, std::move(batch)).first->second;
}

const simd::ComplexArray& BatchEvaluator::evaluate(const Expr& e) {
    const Node* key = e.node();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    keepAlive_.push_back(e.node_);
    const Node& n = *key;
    const std::size_t size = points_.size();
    simd::ComplexArray out;
    switch (n.kind) {
        case NodeKind::Constant:
            out = simd::ComplexArray(size, n.value);
            break;
        case NodeKind::Variable:
            out = points_;
            break;
        case NodeKind::Add:
            out = simd::add(evaluate(n.a), evaluate(n.b));
            break;
        case NodeKind::Sub:
            out = simd::sub(evaluate(n.a), evaluate(n.b));
            break;
        case NodeKind::Mul:
            out = simd::mul(evaluate(n.a), evaluate(n.b));
            break;
        case NodeKind::Div:
            noteDenominator(n.b);
            out = simd::div(evaluate(n.a), evaluate(n.b));
            break;
        case NodeKind::Neg:
            out = simd::scale(Complex(-1.0, 0.0), evaluate(n.a));
            break;
        case NodeKind::Pow: {
            const simd::ComplexArray& base = evaluate(n.a);
            simd::ComplexArray result(size, Complex(1.0, 0.0));
            simd::ComplexArray square = base;
            for (unsigned k = static_cast<unsigned>(std::abs(n.exponent)); k != 0; k >>= 1) {
                if (k & 1U) result = simd::mul(result, square);
                if (k > 1) square = simd::mul(square, square);
            }
            if (n.exponent < 0) {
                noteDenominator(n.a);
                result = simd::div(simd::ComplexArray(size, Complex(1.0, 0.0)), result);
            }
            out = std::move(result);
            break;
        }
        case NodeKind::Exp: {
            const simd::ComplexArray& arg = evaluate(n.a);
            out = simd::ComplexArray(size);
            for (std::size_t k = 0; k < size; ++k) out.set(k, std::exp(arg.at(k)));
            break;
        }
        case NodeKind::Wp:
            out = wpBatch(n).wp;
            break;
        case NodeKind::WpPrime:
            out = wpBatch(n).wpPrime;
            break;
    }
    for (std::size_t k = 0; k < size; ++k) {
        if (!std::isfinite(out.re[k]) || !std::isfinite(out.im[k])) guards_.pole[k] = 1;
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

namespace {

template <class C>
C constantValue(const Node& n) {
    if constexpr (symbolic::CoefficientTraits<C>::kExact) {
        if (!n.exact) throw NotExact("constant " + (n.label.empty() ? formatComplex(n.value) : n.label) + " is not in Q(i)");
        return *n.exact;
    } else {
        return n.value;
    }
}

}  // namespace

template <class C>
symbolic::LaurentSeries<C> SeriesEvaluator<C>::evaluate(const Expr& e) {
    using Series = symbolic::LaurentSeries<C>;
    using Traits = symbolic::CoefficientTraits<C>;
    const Node* key = e.node();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    keepAlive_.push_back(e.node_);
    const Node& n = *key;
    const int working = variablePrecision_;
    // Exact leaves carry extra precision so that multiplying them into a
    // principal part costs nothing.
    const int exact_precision = working + 2 * Series::kMaxPoleOrder + 2;
    Series out;
    switch (n.kind) {
        case NodeKind::Constant:
            out = Series::constant(constantValue<C>(n), exact_precision);
            break;
        case NodeKind::Variable:
            out = Series::monomial(Traits::fromInt(1), 1, exact_precision);
            break;
        case NodeKind::Add:
            out = evaluate(n.a) + evaluate(n.b);
            break;
        case NodeKind::Sub:
            out = evaluate(n.a) - evaluate(n.b);
            break;
        case NodeKind::Mul:
            out = evaluate(n.a) * evaluate(n.b);
            break;
        case NodeKind::Div:
            out = evaluate(n.a) * evaluate(n.b).inverse();
            break;
        case NodeKind::Neg:
            out = -evaluate(n.a);
            break;
        case NodeKind::Pow: {
            const Series base = evaluate(n.a);
            out = n.exponent >= 0 ? base.pow(n.exponent) : base.inverse().pow(-n.exponent);
            break;
        }
        case NodeKind::Exp: {
            Series arg = evaluate(n.a);
            arg = arg.truncated(std::min(arg.precision(), working));
            const C c0 = arg.coefficient(0);
            if (arg.valuation() < 0) throw InvalidInput("exp of a series with a pole");
            const Series tail = arg - Series::constant(c0, arg.precision());
            const auto scale = Traits::exp(c0);
            if (!scale) throw NotExact("exp of a nonzero constant term is not in Q(i)");
            out = *scale * symbolic::expOfSeries(tail);
            break;
        }
        case NodeKind::Wp:
        case NodeKind::WpPrime: {
            Series arg = evaluate(n.a);
            arg = arg.truncated(std::min(arg.precision(), working));
            if (arg.isZero() || arg.valuation() < 1) {
                throw InvalidInput("series of wp needs an argument vanishing at the expansion point");
            }
            const wp::Invariants& inv = n.engine->invariants();
            out = n.kind == NodeKind::Wp ? symbolic::wpOfSeries<C>(inv, arg) : symbolic::wpPrimeOfSeries<C>(inv, arg);
            break;
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

template <class C>
symbolic::LaurentSeries<C> seriesThrough(const Expr& e, int order) {
    for (int working = order + 16; working <= order + 256; working += 40) {
        SeriesEvaluator<C> evaluator(working);
        const auto s = evaluator.evaluate(e);
        if (s.precision() > order) return s.truncated(order + 1);
    }
    throw NumericFailure("series precision could not reach the requested order");
}

template class SeriesEvaluator<RationalComplex>;
template class SeriesEvaluator<Complex>;
template symbolic::ExactSeries seriesThrough<RationalComplex>(const Expr&, int);
template symbolic::FloatSeries seriesThrough<Complex>(const Expr&, int);

}  // namespace fermatlab::families

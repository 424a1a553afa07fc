#include "tunnelsplit/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>
#include <vector>

namespace tunnelsplit {

Dual2 operator+(const Dual2& a, const Dual2& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }

Dual2 operator-(const Dual2& a, const Dual2& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }

Dual2 operator-(const Dual2& a) { return {-a.v, -a.d1, -a.d2}; }

Dual2 operator*(const Dual2& a, const Dual2& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}

Dual2 operator/(const Dual2& a, const Dual2& b) {
    const double v = a.v / b.v;
    const double d1 = (a.d1 - v * b.d1) / b.v;
    const double d2 = (a.d2 - 2.0 * d1 * b.d1 - v * b.d2) / b.v;
    return {v, d1, d2};
}

Dual2 pow_int(const Dual2& a, long n) {
    if (n == 0) return Dual2::constant(1.0);
    const double f = std::pow(a.v, static_cast<double>(n));
    const double fm1 = std::pow(a.v, static_cast<double>(n - 1));
    const double fm2 = std::pow(a.v, static_cast<double>(n - 2));
    const double dn = static_cast<double>(n);
    return {f, dn * fm1 * a.d1, dn * (dn - 1.0) * fm2 * a.d1 * a.d1 + dn * fm1 * a.d2};
}

namespace {
Dual2 chain(double f, double fp, double fpp, const Dual2& g) {
    return {f, fp * g.d1, fpp * g.d1 * g.d1 + fp * g.d2};
}
}  // namespace

Dual2 exp(const Dual2& a) {
    const double e = std::exp(a.v);
    return chain(e, e, e, a);
}

Dual2 cosh(const Dual2& a) { return chain(std::cosh(a.v), std::sinh(a.v), std::cosh(a.v), a); }

Dual2 cos(const Dual2& a) { return chain(std::cos(a.v), -std::sin(a.v), -std::cos(a.v), a); }

// ---------------------------------------------------------------------------

struct Expression::Node {
    enum class Kind { Constant, Variable, Add, Sub, Mul, Div, Neg, PowInt, Exp, Cosh, Cos };

    Kind kind;
    double constant = 0.0;
    long exponent = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;

    Dual2 eval(double q) const {
        switch (kind) {
            case Kind::Constant: return Dual2::constant(constant);
            case Kind::Variable: return Dual2::variable(q);
            case Kind::Add: return lhs->eval(q) + rhs->eval(q);
            case Kind::Sub: return lhs->eval(q) - rhs->eval(q);
            case Kind::Mul: return lhs->eval(q) * rhs->eval(q);
            case Kind::Div: return lhs->eval(q) / rhs->eval(q);
            case Kind::Neg: return -lhs->eval(q);
            case Kind::PowInt: return pow_int(lhs->eval(q), exponent);
            case Kind::Exp: return tunnelsplit::exp(lhs->eval(q));
            case Kind::Cosh: return tunnelsplit::cosh(lhs->eval(q));
            case Kind::Cos: return tunnelsplit::cos(lhs->eval(q));
        }
        return {};
    }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Kind = Expression::Node::Kind;

NodePtr make(Kind k, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = k;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_const(double c) {
    auto n = std::make_shared<Expression::Node>();
    n->kind = Kind::Constant;
    n->constant = c;
    return n;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr run() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("empty expression", 0);
        NodePtr e = expr();
        skip_ws();
        if (pos_ < text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr e = term();
        for (;;) {
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                e = make(c == '+' ? Kind::Add : Kind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    NodePtr term() {
        NodePtr e = factor();
        for (;;) {
            const char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                e = make(c == '*' ? Kind::Mul : Kind::Div, e, factor());
            } else {
                return e;
            }
        }
    }

    // Unary minus binds looser than '^', so -q^2 means -(q^2).
    NodePtr factor() {
        if (peek() == '-') {
            ++pos_;
            return make(Kind::Neg, factor());
        }
        NodePtr base = atom();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        auto n = std::make_shared<Expression::Node>();
        n->kind = Kind::PowInt;
        n->lhs = std::move(base);
        n->exponent = integer();
        return n;
    }

    long integer() {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
        std::size_t digits_begin = p;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        if (p == digits_begin) throw SyntaxError("expected integer exponent", start);
        if (p < text_.size() && (text_[p] == '.' || text_[p] == 'e' || text_[p] == 'E'))
            throw NonIntegerExponentError(start);
        long value = 0;
        auto res = std::from_chars(text_.data() + pos_, text_.data() + p, value);
        if (res.ec != std::errc{}) throw SyntaxError("bad integer exponent", start);
        pos_ = p;
        return value;
    }

    NodePtr atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        throw SyntaxError("unexpected character", pos_);
    }

    NodePtr number() {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        if (p < text_.size() && text_[p] == '.') {
            ++p;
            while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        }
        if (p < text_.size() && (text_[p] == 'e' || text_[p] == 'E')) {
            std::size_t q = p + 1;
            if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
            std::size_t digits_begin = q;
            while (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) ++q;
            if (q > digits_begin) p = q;
        }
        double value = 0.0;
        auto res = std::from_chars(text_.data() + start, text_.data() + p, value);
        if (res.ec != std::errc{} || res.ptr != text_.data() + p)
            throw SyntaxError("malformed number", start);
        pos_ = p;
        return make_const(value);
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        std::size_t p = pos_;
        while (p < text_.size() && std::isalpha(static_cast<unsigned char>(text_[p]))) ++p;
        const std::string name(text_.substr(start, p - start));
        pos_ = p;
        if (name == "q") return make(Kind::Variable);
        if (peek() != '(') {
            if (name == "exp" || name == "cosh" || name == "cos")
                throw SyntaxError("expected '(' after function name", pos_);
            throw SyntaxError("unknown symbol '" + name + "'", start);
        }
        ++pos_;
        NodePtr arg = expr();
        if (peek() != ')') throw SyntaxError("expected ')'", pos_);
        ++pos_;
        if (name == "exp") return make(Kind::Exp, arg);
        if (name == "cosh") return make(Kind::Cosh, arg);
        if (name == "cos") return make(Kind::Cos, arg);
        throw UnknownFunctionError(name, start);
    }
};

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

Expression Expression::parse(std::string_view text) {
    return Expression(Parser(text).run(), std::string(text));
}

Expression Expression::from_coefficients(std::span<const double> coeffs) {
    NodePtr sum = make_const(coeffs.empty() ? 0.0 : coeffs[0]);
    std::string text = coeffs.empty() ? "0" : std::to_string(coeffs[0]);
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        auto pw = std::make_shared<Expression::Node>();
        pw->kind = Kind::PowInt;
        pw->lhs = make(Kind::Variable);
        pw->exponent = static_cast<long>(i);
        sum = make(Kind::Add, sum, make(Kind::Mul, make_const(coeffs[i]), pw));
        text += " + " + std::to_string(coeffs[i]) + "*q^" + std::to_string(i);
    }
    return Expression(sum, text);
}

double Expression::value(double q) const { return eval(q).v; }

Dual2 Expression::eval(double q) const {
    Dual2 r = root_->eval(q);
    if (!std::isfinite(r.v) || !std::isfinite(r.d1) || !std::isfinite(r.d2))
        throw DomainError("non-finite value while evaluating '" + text_ + "' at q=" +
                          std::to_string(q));
    return r;
}

}  // namespace tunnelsplit

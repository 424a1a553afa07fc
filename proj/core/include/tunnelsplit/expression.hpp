#ifndef TUNNELSPLIT_EXPRESSION_HPP
#define TUNNELSPLIT_EXPRESSION_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "tunnelsplit/errors.hpp"

namespace tunnelsplit {

// Second-order forward-mode dual number: value, first and second derivative
// with respect to the evaluation variable. Exact to rounding for the
// supported grammar.
struct Dual2 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static Dual2 constant(double c) { return {c, 0.0, 0.0}; }
    static Dual2 variable(double q) { return {q, 1.0, 0.0}; }
};

Dual2 operator+(const Dual2& a, const Dual2& b);
Dual2 operator-(const Dual2& a, const Dual2& b);
Dual2 operator-(const Dual2& a);
Dual2 operator*(const Dual2& a, const Dual2& b);
Dual2 operator/(const Dual2& a, const Dual2& b);
Dual2 pow_int(const Dual2& a, long n);
Dual2 exp(const Dual2& a);
Dual2 cosh(const Dual2& a);
Dual2 cos(const Dual2& a);

// Parsed arithmetic expression in one variable `q`.
//
// Grammar:  expr   := term (('+'|'-') term)*
//           term   := factor (('*'|'/') factor)*
//           factor := '-' factor | atom ('^' integer)?
//           atom   := number | 'q' | '(' expr ')' | func '(' expr ')'
//           func   in {exp, cosh, cos}
// Unary minus binds looser than '^': -q^2 is -(q^2).
class Expression {
  public:
    // Throws SyntaxError / UnknownFunctionError / NonIntegerExponentError.
    static Expression parse(std::string_view text);

    // Polynomial c0 + c1*q + ... + cn*q^n. The double-well grammar only
    // ever needs even coefficients; odd ones are accepted and up to the
    // caller to keep zero.
    static Expression from_coefficients(std::span<const double> coeffs);

    double value(double q) const;

    // Value plus first two derivatives at q. Throws DomainError if the
    // evaluation produces a non-finite intermediate.
    Dual2 eval(double q) const;

    const std::string& text() const { return text_; }

    struct Node;

  private:
    explicit Expression(std::shared_ptr<const Node> root, std::string text);
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace tunnelsplit

#endif

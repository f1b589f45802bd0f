#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deskcalc::expr {

// Evaluation hit a point outside the expression's domain (division by
// zero, ln of a non-positive value, sqrt of a negative, 0^negative).
// Carries the offending sub-expression rendered as text.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, std::string subexpression)
        : std::runtime_error(what), subexpression_(std::move(subexpression)) {}

    const std::string& subexpression() const noexcept { return subexpression_; }

private:
    std::string subexpression_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Func { Sqrt, Exp, Ln, Sin, Cos, Abs };

namespace detail {
struct Node;
}

/// Immutable single-variable arithmetic expression tree.
/// Trees share structure; copying an Expr is cheap.
class Expr {
public:
    static Expr constant(double value);
    static Expr variable();
    static Expr negate(Expr child);
    static Expr binary(BinaryOp op, Expr left, Expr right);
    static Expr call(Func fn, Expr arg);

    /// Value of the expression at x. Throws EvalError on domain errors.
    double evaluate(double x) const;

    /// Exact symbolic derivative with respect to x, simplified.
    Expr derivative() const;

    /// Constant folding and identity elimination; value-preserving on
    /// the common domain.
    Expr simplify() const;

    /// Text form accepted back by parse().
    std::string render() const;

    bool is_constant() const;
    double constant_value() const;  // precondition: is_constant()

    bool same_tree(const Expr& other) const;

private:
    explicit Expr(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const detail::Node> node_;
    friend Expr parse(std::string_view);
    friend struct detail::Node;
};

/// Parses standard infix notation: ^ (right-assoc) > unary - > * / > + -,
/// parentheses, decimal literals, the variable x, and the functions
/// sqrt, exp, ln, sin, cos, abs. Throws ParseError with the offending
/// position.
Expr parse(std::string_view text);

}  // namespace deskcalc::expr

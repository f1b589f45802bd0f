#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deskcalc/expr.hpp"

namespace deskcalc::calculus {

struct GoalSeekResult {
    double x = 0.0;
    double residual = 0.0;   // f(x) - target
    int iterations = 0;
    bool converged = false;
    std::vector<double> history;  // iterates, diagnostics only
};

enum class ExtremumKind { Minimum, Maximum, Inconclusive };

struct ExtremumReport {
    double x = 0.0;
    double fx = 0.0;
    ExtremumKind kind = ExtremumKind::Inconclusive;
    double second_derivative = 0.0;
    bool converged = false;
};

struct FunctionTable {
    struct Row {
        double x;
        std::optional<double> y;   // empty on domain error
        std::string error;         // message when y is empty
    };
    std::vector<Row> rows;
    double step = 0.0;
};

enum class RiemannRule { Left, Right, Midpoint };

struct RiemannResult {
    struct Row {
        double x;
        double delta_x;
        double fx;
        double product;
    };
    std::vector<Row> rows;
    double total = 0.0;
    RiemannRule rule = RiemannRule::Right;
    int n = 0;
};

/// Seeks x with f(x) = target by Newton iteration on the symbolic
/// derivative, falling back to a secant step when the derivative is
/// zero or undefined at an iterate. Non-convergence after max_iterations
/// is a result state, not an error. Throws EvalError only when f is
/// undefined at x0 and at x0 +/- 1e-4.
GoalSeekResult goal_seek(const expr::Expr& f, double target, double x0,
                         double tolerance = 1e-9, int max_iterations = 100);

/// Stationary point of f near x0: goal-seeks f'(x) = 0 and classifies by
/// the sign of f''. |f''| within 1e-8*(1+|f(x)|) is inconclusive, as is
/// goal-seek non-convergence.
ExtremumReport find_extremum(const expr::Expr& f, double x0);

/// Rows at x_start, x_start+step, ... including x_end when the span is an
/// integral number of steps (within 1e-9). Domain errors are recorded
/// per row, not fatal.
FunctionTable tabulate(const expr::Expr& f, double x_start, double x_end, double step);

/// Equal-width Riemann sum with left/right/midpoint sampling. A domain
/// error at any sample point is fatal for the whole sum.
RiemannResult riemann_sum(const expr::Expr& f, double a, double b, int n, RiemannRule rule);

/// Central difference (f(x+h) - f(x-h)) / (2h).
double numeric_derivative(const expr::Expr& f, double x, double h = 1e-6);

}  // namespace deskcalc::calculus

#include "deskcalc/calculus.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace deskcalc::calculus {

namespace {

std::optional<double> try_eval(const expr::Expr& f, double x) {
    try {
        double v = f.evaluate(x);
        if (!std::isfinite(v)) return std::nullopt;
        return v;
    } catch (const expr::EvalError&) {
        return std::nullopt;
    }
}

}  // namespace

GoalSeekResult goal_seek(const expr::Expr& f, double target, double x0,
                         double tolerance, int max_iterations) {
    double x = x0;
    std::optional<double> g = try_eval(f, x);
    if (!g) {
        for (double probe : {x0 + 1e-4, x0 - 1e-4}) {
            g = try_eval(f, probe);
            if (g) {
                x = probe;
                break;
            }
        }
        if (!g) {
            throw expr::EvalError("function undefined at the start value and nearby",
                                  f.render());
        }
    }

    expr::Expr df = f.derivative();

    GoalSeekResult result;
    result.history.push_back(x);

    double prev_x = x;
    double prev_g = *g - target;
    bool have_prev = false;

    for (int iter = 0; iter <= max_iterations; ++iter) {
        double residual = *g - target;
        result.x = x;
        result.residual = residual;
        result.iterations = iter;
        if (std::fabs(residual) <= tolerance) {
            result.converged = true;
            return result;
        }
        if (iter == max_iterations) break;

        double step = 0.0;
        std::optional<double> slope = try_eval(df, x);
        if (slope && std::fabs(*slope) > 1e-300) {
            step = -residual / *slope;
        } else if (have_prev && prev_g != residual && prev_x != x) {
            // secant through the previous iterate
            step = -residual * (x - prev_x) / (residual - prev_g);
        } else {
            // no usable slope yet: finite-difference bootstrap
            double h = 1e-4 * (1.0 + std::fabs(x));
            auto fp = try_eval(f, x + h);
            if (!fp || *fp == *g) break;  // flat or undefined, stuck
            step = -residual * h / (*fp - *g);
        }
        if (!std::isfinite(step) || step == 0.0) break;

        prev_x = x;
        prev_g = residual;
        have_prev = true;

        // back off the step until f is evaluable and the residual shrinks;
        // undamped Newton can overshoot past a pole into another basin
        double next = x + step;
        std::optional<double> gn = try_eval(f, next);
        int back = 0;
        while (back < 60 && (!gn || std::fabs(*gn - target) >= std::fabs(residual))) {
            step *= 0.5;
            next = x + step;
            gn = try_eval(f, next);
            ++back;
        }
        if (!gn || std::fabs(*gn - target) >= std::fabs(residual)) break;  // stuck
        x = next;
        g = gn;
        result.history.push_back(x);
    }
    result.converged = false;
    return result;
}

ExtremumReport find_extremum(const expr::Expr& f, double x0) {
    expr::Expr df = f.derivative();
    GoalSeekResult gs = goal_seek(df, 0.0, x0);

    ExtremumReport report;
    report.x = gs.x;
    report.converged = gs.converged;
    auto fx = try_eval(f, gs.x);
    report.fx = fx.value_or(std::nan(""));
    auto d2 = try_eval(df.derivative(), gs.x);
    report.second_derivative = d2.value_or(std::nan(""));

    if (!gs.converged || !fx || !d2) {
        report.kind = ExtremumKind::Inconclusive;
        return report;
    }
    double eps = 1e-8 * (1.0 + std::fabs(*fx));
    if (*d2 > eps) {
        report.kind = ExtremumKind::Minimum;
    } else if (*d2 < -eps) {
        report.kind = ExtremumKind::Maximum;
    } else {
        report.kind = ExtremumKind::Inconclusive;
    }
    return report;
}

FunctionTable tabulate(const expr::Expr& f, double x_start, double x_end, double step) {
    if (step <= 0.0) throw std::invalid_argument("tabulate: step must be positive");
    if (x_start >= x_end) throw std::invalid_argument("tabulate: empty range");

    double span = (x_end - x_start) / step;
    long count = static_cast<long>(std::floor(span + 1e-9)) + 1;

    FunctionTable table;
    table.step = step;
    table.rows.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        double x = x_start + static_cast<double>(i) * step;
        FunctionTable::Row row{x, std::nullopt, {}};
        try {
            row.y = f.evaluate(x);
        } catch (const expr::EvalError& e) {
            row.error = e.what();
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

RiemannResult riemann_sum(const expr::Expr& f, double a, double b, int n, RiemannRule rule) {
    if (n < 1) throw std::invalid_argument("riemann_sum: n must be at least 1");
    if (!(a < b)) throw std::invalid_argument("riemann_sum: requires a < b");

    double delta_x = (b - a) / n;
    RiemannResult result;
    result.rule = rule;
    result.n = n;
    result.rows.reserve(static_cast<std::size_t>(n));

    for (int i = 0; i < n; ++i) {
        double x;
        switch (rule) {
            case RiemannRule::Left: x = a + i * delta_x; break;
            case RiemannRule::Right: x = a + (i + 1) * delta_x; break;
            case RiemannRule::Midpoint: x = a + (i + 0.5) * delta_x; break;
            default: x = a; break;
        }
        double fx = f.evaluate(x);  // domain error propagates, fatal here
        double product = fx * delta_x;
        result.rows.push_back({x, delta_x, fx, product});
        result.total += product;
    }
    return result;
}

double numeric_derivative(const expr::Expr& f, double x, double h) {
    return (f.evaluate(x + h) - f.evaluate(x - h)) / (2.0 * h);
}

}  // namespace deskcalc::calculus

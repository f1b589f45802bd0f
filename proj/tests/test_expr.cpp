#include <doctest.h>

#include <cmath>
#include <random>

#include "deskcalc/expr.hpp"
#include "generators.hpp"

using namespace deskcalc;
using expr::BinaryOp;
using expr::Expr;

TEST_CASE("parse builds the expected tree for the cost function") {
    Expr e = expr::parse("42*x + 16800/x");
    Expr expected = Expr::binary(
        BinaryOp::Add, Expr::binary(BinaryOp::Mul, Expr::constant(42), Expr::variable()),
        Expr::binary(BinaryOp::Div, Expr::constant(16800), Expr::variable()));
    CHECK(e.same_tree(expected));
    CHECK(e.evaluate(20.0) == doctest::Approx(1680.0));  // 42*20 + 16800/20
}

TEST_CASE("parse: identity and precedence") {
    CHECK(expr::parse("x").evaluate(7.0) == 7.0);
    CHECK(expr::parse("2^3^2").evaluate(0.0) == 512.0);  // right-associative
    CHECK(expr::parse("2+3*4").evaluate(0.0) == 14.0);
    CHECK(expr::parse("-2^2").evaluate(0.0) == -4.0);  // ^ binds tighter than unary -
    CHECK(expr::parse("2^-1").evaluate(0.0) == 0.5);
    CHECK(expr::parse("(2+3)*4").evaluate(0.0) == 20.0);
    CHECK(expr::parse("10-3-2").evaluate(0.0) == 5.0);  // left-associative
    CHECK(expr::parse("16/4/2").evaluate(0.0) == 2.0);
    CHECK(expr::parse("1.5e2").evaluate(0.0) == 150.0);
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(expr::parse(""), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("   "), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("2+*3"), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("y + 1"), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("tan(x)"), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("(1+2"), expr::ParseError);
    CHECK_THROWS_AS(expr::parse("1+2)"), expr::ParseError);
    try {
        expr::parse("1 + @");
    } catch (const expr::ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("evaluate: paper rows and domain errors") {
    CHECK(expr::parse("42 - 16800/x^2").evaluate(20.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(expr::parse("x+2").evaluate(1.2) == doctest::Approx(3.2));
    CHECK_THROWS_AS(expr::parse("1/x").evaluate(0.0), expr::EvalError);
    CHECK_THROWS_AS(expr::parse("ln(x)").evaluate(0.0), expr::EvalError);
    CHECK_THROWS_AS(expr::parse("sqrt(x)").evaluate(-1.0), expr::EvalError);
    CHECK_THROWS_AS(expr::parse("x^(0-1)").evaluate(0.0), expr::EvalError);
    CHECK(expr::parse("sqrt(x)").evaluate(9.0) == 3.0);
    CHECK(expr::parse("exp(ln(x))").evaluate(2.5) == doctest::Approx(2.5));
    CHECK(expr::parse("abs(0-3)").evaluate(0.0) == 3.0);
    try {
        expr::parse("1 + 1/(x-1)").evaluate(1.0);
        FAIL("expected domain error");
    } catch (const expr::EvalError& e) {
        CHECK(e.subexpression() == "1/(x - 1)");
    }
}

TEST_CASE("derivative: paper case and basic rules") {
    Expr d = expr::parse("42*x + 16800/x").derivative();
    // 42 - 16800/x^2, checked by value
    Expr reference = expr::parse("42 - 16800/x^2");
    for (double x : {1.0, 3.0, 7.5, 20.0, -4.0}) {
        CHECK(d.evaluate(x) == doctest::Approx(reference.evaluate(x)).epsilon(1e-12));
    }
    CHECK(expr::parse("x+2").derivative().evaluate(123.0) == 1.0);
    CHECK(expr::parse("x^2").derivative().evaluate(3.0) == doctest::Approx(6.0));
    CHECK(expr::parse("sin(x)").derivative().evaluate(0.0) == doctest::Approx(1.0));
    CHECK(expr::parse("cos(x)").derivative().evaluate(0.0) == doctest::Approx(0.0));
    CHECK(expr::parse("exp(2*x)").derivative().evaluate(0.0) == doctest::Approx(2.0));
    CHECK(expr::parse("ln(x)").derivative().evaluate(4.0) == doctest::Approx(0.25));
    CHECK(expr::parse("sqrt(x)").derivative().evaluate(4.0) == doctest::Approx(0.25));
    CHECK(expr::parse("abs(x)").derivative().evaluate(-2.0) == doctest::Approx(-1.0));
    // general exponent: d/dx x^x = x^x (ln x + 1)
    CHECK(expr::parse("x^x").derivative().evaluate(2.0) ==
          doctest::Approx(4.0 * (std::log(2.0) + 1.0)));
}

TEST_CASE("simplify folds and eliminates identities") {
    Expr one_times_x = Expr::binary(BinaryOp::Mul, Expr::constant(1), Expr::variable());
    CHECK(one_times_x.simplify().same_tree(Expr::variable()));

    Expr two_plus_three = Expr::binary(BinaryOp::Add, Expr::constant(2), Expr::constant(3));
    CHECK(two_plus_three.simplify().same_tree(Expr::constant(5)));

    Expr d = expr::parse("42*x").derivative();
    CHECK(d.is_constant());
    CHECK(d.constant_value() == 42.0);

    CHECK(expr::parse("x + 0").simplify().same_tree(Expr::variable()));
    CHECK(expr::parse("x * 0").simplify().same_tree(Expr::constant(0)));
    CHECK(expr::parse("x^1").simplify().same_tree(Expr::variable()));
    CHECK(expr::parse("x^0").simplify().same_tree(Expr::constant(1)));
    CHECK(expr::parse("0 - x").simplify().same_tree(Expr::negate(Expr::variable())));
    // folding must not hide a domain error
    CHECK_THROWS_AS(expr::parse("1/0").simplify().evaluate(0.0), expr::EvalError);
}

TEST_CASE("property: parse(render(e)) evaluates identically") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> x_dist(-10.0, 10.0);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Expr e = testgen::random_expr(rng, 8);
        Expr round = expr::parse(e.render());
        for (int i = 0; i < 100; ++i) {
            double x = x_dist(rng);
            auto a = testgen::try_eval(e, x);
            auto b = testgen::try_eval(round, x);
            REQUIRE(a.has_value() == b.has_value());
            if (!a) continue;
            CHECK(*b == doctest::Approx(*a).epsilon(1e-12));
            ++checked;
        }
    }
    CHECK(checked > 1000);  // the generator must produce evaluable points
}

TEST_CASE("property: simplify preserves value") {
    std::mt19937 rng(987654);
    std::uniform_real_distribution<double> x_dist(-10.0, 10.0);
    for (int trial = 0; trial < 300; ++trial) {
        Expr e = testgen::random_expr(rng, 6);
        Expr s = e.simplify();
        for (int i = 0; i < 20; ++i) {
            double x = x_dist(rng);
            auto a = testgen::try_eval(e, x);
            auto b = testgen::try_eval(s, x);
            if (!a || !b) continue;  // common domain only
            CHECK(*b == doctest::Approx(*a).epsilon(1e-12));
        }
    }
}

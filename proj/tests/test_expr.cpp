#include <doctest.h>

#include <cmath>
#include <random>

#include "seqspace/expr.hpp"

using namespace seqspace;

TEST_CASE("parser pins the documented shapes") {
    CHECK(expr_equal(parse_expr("1/(n+1)"),
                     Expr::div(Expr::number(1), Expr::add(Expr::variable('n'), Expr::number(1)))));
    CHECK(expr_equal(
        parse_expr("1+1/(n+1)"),
        Expr::add(Expr::number(1),
                  Expr::div(Expr::number(1), Expr::add(Expr::variable('n'), Expr::number(1))))));
    // ^ binds right to left
    CHECK(expr_equal(parse_expr("2^n^2"),
                     Expr::pow(Expr::number(2), Expr::pow(Expr::variable('n'), Expr::number(2)))));
    // unary minus sits between * and ^
    CHECK(expr_equal(parse_expr("-n^2"),
                     Expr::neg(Expr::pow(Expr::variable('n'), Expr::number(2)))));
    CHECK(expr_equal(parse_expr("2*k+1"),
                     Expr::add(Expr::mul(Expr::number(2), Expr::variable('k')), Expr::number(1))));
    CHECK(expr_equal(parse_expr("min(n, k)"),
                     Expr::call(Func::Min, Expr::variable('n'), Expr::variable('k'))));
    CHECK(expr_equal(parse_expr("0.5"), Expr::number(Rational(1, 2))));
}

TEST_CASE("parse errors carry codes and offsets") {
    CHECK_THROWS_WITH_AS(static_cast<void>(parse_expr("")), doctest::Contains("empty"),
                         ParseError);
    try {
        static_cast<void>(parse_expr("1+(n"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ParseError::Code::UnbalancedParen);
    }
    try {
        static_cast<void>(parse_expr("2*m"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.code() == ParseError::Code::UnknownIdentifier);
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("evaluation matches hand values") {
    Bindings env;
    env.n = 4;
    ExprPtr e = parse_expr("1/(n+1)");
    CHECK(eval_exact(*e, env) == Rational(1, 5));
    CHECK(eval_f64(*e, env) == 0.2);
    CHECK(eval_exact(*parse_expr("2^n^2"), env) == Rational(65536));
    CHECK(eval_f64(*parse_expr("0^0"), {}) == 1.0);
}

TEST_CASE("exact mode rejects transcendental calls") {
    Bindings env;
    env.n = 3;
    try {
        static_cast<void>(eval_exact(*parse_expr("log(n)"), env));
        FAIL("expected an eval error");
    } catch (const EvalError& e) {
        CHECK(e.code() == EvalError::Code::RationalUnsupported);
    }
    std::string why;
    CHECK(certainly_not_exact(*parse_expr("log(n)"), &why));
    CHECK(!why.empty());
    CHECK(certainly_not_exact(*parse_expr("n^0.5")));
    CHECK(!certainly_not_exact(*parse_expr("n^2")));
    // a variable exponent passes the static screen even if it can fail later
    CHECK(!certainly_not_exact(*parse_expr("n^k")));
}

TEST_CASE("division by zero throws in both modes") {
    Bindings env;
    env.n = 0;
    ExprPtr e = parse_expr("1/n");
    CHECK_THROWS_AS(static_cast<void>(eval_f64(*e, env)), EvalError);
    CHECK_THROWS_AS(static_cast<void>(eval_exact(*e, env)), EvalError);
}

namespace {

ExprPtr random_tree(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> v(0, 12);
            return Expr::number(v(rng));
        }
        case 1: {
            std::uniform_int_distribution<int> v(0, 1);
            return Expr::variable(v(rng) ? 'n' : 'k');
        }
        case 2: return Expr::neg(random_tree(rng, depth - 1));
        case 3: return Expr::add(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 4: return Expr::sub(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 5: return Expr::mul(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 6: return Expr::div(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 7: {
            std::uniform_int_distribution<int> v(0, 3);
            return Expr::pow(random_tree(rng, depth - 1), Expr::number(v(rng)));
        }
        default: {
            std::uniform_int_distribution<int> f(0, 5);
            auto func = static_cast<Func>(f(rng));
            if (func_arity(func) == 2)
                return Expr::call(func, random_tree(rng, depth - 1), random_tree(rng, depth - 1));
            return Expr::call(func, random_tree(rng, depth - 1));
        }
    }
}

}  // namespace

TEST_CASE("print/parse round trip is the identity on random trees") {
    std::mt19937 rng(20260814);
    for (int i = 0; i < 500; ++i) {
        ExprPtr e = random_tree(rng, 4);
        std::string text = print_expr(e);
        ExprPtr back = parse_expr(text);
        CAPTURE(text);
        CHECK(expr_equal(e, back));
        CHECK(print_expr(back) == text);
    }
}

TEST_CASE("float and exact evaluation agree on rational-closed trees") {
    std::mt19937 rng(977);
    std::uniform_int_distribution<long long> bind(0, 10000);
    const double tol = std::ldexp(1.0, -40);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        ExprPtr e = random_tree(rng, 3);
        if (certainly_not_exact(*e)) continue;
        Bindings env;
        env.n = bind(rng);
        env.k = bind(rng);
        Rational exact;
        try {
            exact = eval_exact(*e, env);
        } catch (const EvalError&) {
            // zero denominators and friends must fail in float mode too
            CHECK_THROWS_AS(static_cast<void>(eval_f64(*e, env)), EvalError);
            continue;
        }
        double f = eval_f64(*e, env);
        double want = exact.to_double();
        if (!std::isfinite(f) || !std::isfinite(want)) continue;  // overflowed doubles
        CAPTURE(print_expr(e));
        CHECK(std::fabs(f - want) <= tol * std::max(1.0, std::fabs(want)));
        ++checked;
    }
    CHECK(checked > 100);
}

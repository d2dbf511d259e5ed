#pragma once

#include <memory>
#include <optional>
#include <string>

#include "seqspace/errors.hpp"
#include "seqspace/rational.hpp"

namespace seqspace {

enum class ExprKind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Func { Log, Exp, Sqrt, Abs, Min, Max };

const char* func_name(Func f);
int func_arity(Func f);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree over integer index variables n and k.
struct Expr {
    ExprKind kind;
    Rational value;         // Number
    char var = 0;           // Var: 'n' or 'k'
    Func func = Func::Log;  // Call
    ExprPtr a;              // unary operand / lhs / first argument
    ExprPtr b;              // rhs / second argument

    /// Literals are nonnegative and decimal-representable (denominator 2^a*5^b),
    /// which is exactly what the grammar can produce; anything else must be
    /// spelled with operators. Signs are Neg nodes.
    static ExprPtr number(const Rational& r);
    static ExprPtr number(long long v);
    static ExprPtr variable(char name);
    static ExprPtr neg(ExprPtr e);
    static ExprPtr add(ExprPtr l, ExprPtr r);
    static ExprPtr sub(ExprPtr l, ExprPtr r);
    static ExprPtr mul(ExprPtr l, ExprPtr r);
    static ExprPtr div(ExprPtr l, ExprPtr r);
    static ExprPtr pow(ExprPtr l, ExprPtr r);
    static ExprPtr call(Func f, ExprPtr x, ExprPtr y = nullptr);
};

bool expr_equal(const Expr& lhs, const Expr& rhs);
inline bool expr_equal(const ExprPtr& lhs, const ExprPtr& rhs) { return expr_equal(*lhs, *rhs); }

/// Grammar: + - on top, then * /, then unary -, then right-associative ^,
/// then atoms (numbers, n, k, calls, parens). "2^n^2" is 2^(n^2) and
/// "-n^2" is -(n^2). Throws ParseError with a byte offset.
ExprPtr parse_expr(const std::string& src);

/// Canonical text form; parse_expr(print_expr(e)) reproduces e node for node.
std::string print_expr(const Expr& e);
inline std::string print_expr(const ExprPtr& e) { return print_expr(*e); }

struct Bindings {
    std::optional<long long> n;
    std::optional<long long> k;
};

/// IEEE double evaluation. 0^0 is 1; log needs a positive argument,
/// sqrt a nonnegative one; x/0 and 0^negative throw DivisionByZero.
double eval_f64(const Expr& e, const Bindings& env);

/// Exact evaluation. Same conventions, except log/exp/sqrt and
/// non-integer exponents throw RationalUnsupported.
Rational eval_exact(const Expr& e, const Bindings& env);

template <class T>
T eval_expr(const Expr& e, const Bindings& env);

template <>
inline double eval_expr<double>(const Expr& e, const Bindings& env) { return eval_f64(e, env); }
template <>
inline Rational eval_expr<Rational>(const Expr& e, const Bindings& env) { return eval_exact(e, env); }

/// True when the tree is certain to fail in exact mode for every binding:
/// it contains log/exp/sqrt, or a constant non-integer exponent.
/// Variable exponents pass this screen and may still fail at eval time.
bool certainly_not_exact(const Expr& e, std::string* why = nullptr);

}  // namespace seqspace

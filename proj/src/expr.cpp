#include "seqspace/expr.hpp"

#include <cctype>
#include <cmath>
#include <vector>

namespace seqspace {

const char* func_name(Func f) {
    switch (f) {
        case Func::Log: return "log";
        case Func::Exp: return "exp";
        case Func::Sqrt: return "sqrt";
        case Func::Abs: return "abs";
        case Func::Min: return "min";
        case Func::Max: return "max";
    }
    return "?";
}

int func_arity(Func f) { return (f == Func::Min || f == Func::Max) ? 2 : 1; }

namespace {

bool decimal_representable(const Rational& r) {
    mpz_class d = r.raw().get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 2);
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 5);
    return d == 1;
}

ExprPtr make(Expr&& e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr Expr::number(const Rational& r) {
    if (r.sign() < 0 || !decimal_representable(r))
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              "literal " + r.to_string() +
                                  " is not expressible in the grammar; build it with operators");
    Expr e{ExprKind::Number, r, 0, Func::Log, nullptr, nullptr};
    return make(std::move(e));
}

ExprPtr Expr::number(long long v) { return number(Rational(v)); }

ExprPtr Expr::variable(char name) {
    if (name != 'n' && name != 'k')
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              std::string("unknown variable '") + name + "'");
    Expr e{ExprKind::Var, Rational(0), name, Func::Log, nullptr, nullptr};
    return make(std::move(e));
}

ExprPtr Expr::neg(ExprPtr x) { return make(Expr{ExprKind::Neg, Rational(0), 0, Func::Log, std::move(x), nullptr}); }
ExprPtr Expr::add(ExprPtr l, ExprPtr r) { return make(Expr{ExprKind::Add, Rational(0), 0, Func::Log, std::move(l), std::move(r)}); }
ExprPtr Expr::sub(ExprPtr l, ExprPtr r) { return make(Expr{ExprKind::Sub, Rational(0), 0, Func::Log, std::move(l), std::move(r)}); }
ExprPtr Expr::mul(ExprPtr l, ExprPtr r) { return make(Expr{ExprKind::Mul, Rational(0), 0, Func::Log, std::move(l), std::move(r)}); }
ExprPtr Expr::div(ExprPtr l, ExprPtr r) { return make(Expr{ExprKind::Div, Rational(0), 0, Func::Log, std::move(l), std::move(r)}); }
ExprPtr Expr::pow(ExprPtr l, ExprPtr r) { return make(Expr{ExprKind::Pow, Rational(0), 0, Func::Log, std::move(l), std::move(r)}); }

ExprPtr Expr::call(Func f, ExprPtr x, ExprPtr y) {
    int arity = func_arity(f);
    if ((arity == 1) != (y == nullptr))
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              std::string(func_name(f)) + " takes " + std::to_string(arity) + " argument(s)");
    return make(Expr{ExprKind::Call, Rational(0), 0, f, std::move(x), std::move(y)});
}

bool expr_equal(const Expr& lhs, const Expr& rhs) {
    if (lhs.kind != rhs.kind) return false;
    switch (lhs.kind) {
        case ExprKind::Number: return lhs.value == rhs.value;
        case ExprKind::Var: return lhs.var == rhs.var;
        case ExprKind::Neg: return expr_equal(*lhs.a, *rhs.a);
        case ExprKind::Call:
            if (lhs.func != rhs.func) return false;
            if (!expr_equal(*lhs.a, *rhs.a)) return false;
            return (lhs.b == nullptr) == (rhs.b == nullptr) && (lhs.b == nullptr || expr_equal(*lhs.b, *rhs.b));
        default:
            return expr_equal(*lhs.a, *rhs.a) && expr_equal(*lhs.b, *rhs.b);
    }
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t off;
    Rational num;
    std::string ident;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t pos = 0;
    while (pos < src.size()) {
        unsigned char c = static_cast<unsigned char>(src[pos]);
        if (std::isspace(c)) {
            ++pos;
            continue;
        }
        std::size_t off = pos;
        if (std::isdigit(c)) {
            std::size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            if (pos < src.size() && src[pos] == '.') {
                std::size_t dot = pos++;
                if (pos == src.size() || !std::isdigit(static_cast<unsigned char>(src[pos])))
                    throw ParseError(ParseError::Code::InvalidNumber, dot, "expected digits after '.'");
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            }
            out.push_back({Tok::Num, off, Rational::parse(src.substr(start, pos - start)), {}});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                ++pos;
            out.push_back({Tok::Ident, off, Rational(0), src.substr(start, pos - start)});
            continue;
        }
        ++pos;
        switch (c) {
            case '+': out.push_back({Tok::Plus, off, Rational(0), {}}); break;
            case '-': out.push_back({Tok::Minus, off, Rational(0), {}}); break;
            case '*': out.push_back({Tok::Star, off, Rational(0), {}}); break;
            case '/': out.push_back({Tok::Slash, off, Rational(0), {}}); break;
            case '^': out.push_back({Tok::Caret, off, Rational(0), {}}); break;
            case '(': out.push_back({Tok::LParen, off, Rational(0), {}}); break;
            case ')': out.push_back({Tok::RParen, off, Rational(0), {}}); break;
            case ',': out.push_back({Tok::Comma, off, Rational(0), {}}); break;
            default:
                throw ParseError(ParseError::Code::UnexpectedToken, off,
                                 std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
    }
    out.push_back({Tok::End, src.size(), Rational(0), {}});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t i = 0;

    const Token& peek() const { return toks[i]; }
    Token take() { return toks[i++]; }

    ExprPtr sum() {
        ExprPtr lhs = product();
        for (;;) {
            if (peek().kind == Tok::Plus) {
                take();
                lhs = Expr::add(std::move(lhs), product());
            } else if (peek().kind == Tok::Minus) {
                take();
                lhs = Expr::sub(std::move(lhs), product());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr product() {
        ExprPtr lhs = unary();
        for (;;) {
            if (peek().kind == Tok::Star) {
                take();
                lhs = Expr::mul(std::move(lhs), unary());
            } else if (peek().kind == Tok::Slash) {
                take();
                lhs = Expr::div(std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr unary() {
        if (peek().kind == Tok::Minus) {
            take();
            return Expr::neg(unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (peek().kind == Tok::Caret) {
            take();
            return Expr::pow(std::move(base), unary());
        }
        return base;
    }

    ExprPtr atom() {
        Token t = take();
        switch (t.kind) {
            case Tok::Num:
                return Expr::number(t.num);
            case Tok::Ident: {
                if (peek().kind == Tok::LParen) return callAtom(t);
                if (t.ident == "n" || t.ident == "k") return Expr::variable(t.ident[0]);
                throw ParseError(ParseError::Code::UnknownIdentifier, t.off,
                                 "unknown identifier \"" + t.ident + "\"");
            }
            case Tok::LParen: {
                ExprPtr inner = sum();
                if (peek().kind != Tok::RParen)
                    throw ParseError(ParseError::Code::UnbalancedParen, peek().off, "expected ')'");
                take();
                return inner;
            }
            case Tok::RParen:
                throw ParseError(ParseError::Code::UnbalancedParen, t.off, "unmatched ')'");
            default:
                throw ParseError(ParseError::Code::UnexpectedToken, t.off, "expected a value");
        }
    }

    ExprPtr callAtom(const Token& name) {
        Func f;
        if (name.ident == "log") f = Func::Log;
        else if (name.ident == "exp") f = Func::Exp;
        else if (name.ident == "sqrt") f = Func::Sqrt;
        else if (name.ident == "abs") f = Func::Abs;
        else if (name.ident == "min") f = Func::Min;
        else if (name.ident == "max") f = Func::Max;
        else
            throw ParseError(ParseError::Code::UnknownIdentifier, name.off,
                             "unknown function \"" + name.ident + "\"");
        take();  // '('
        ExprPtr first = sum();
        ExprPtr second;
        if (func_arity(f) == 2) {
            if (peek().kind != Tok::Comma)
                throw ParseError(ParseError::Code::UnexpectedToken, peek().off,
                                 std::string(func_name(f)) + " takes two arguments; expected ','");
            take();
            second = sum();
        }
        if (peek().kind != Tok::RParen)
            throw ParseError(ParseError::Code::UnbalancedParen, peek().off, "expected ')'");
        take();
        return Expr::call(f, std::move(first), std::move(second));
    }
};

}  // namespace

ExprPtr parse_expr(const std::string& src) {
    Parser p{lex(src)};
    if (p.peek().kind == Tok::End)
        throw ParseError(ParseError::Code::EmptyInput, 0, "empty expression");
    ExprPtr e = p.sum();
    const Token& rest = p.peek();
    if (rest.kind == Tok::RParen)
        throw ParseError(ParseError::Code::UnbalancedParen, rest.off, "unmatched ')'");
    if (rest.kind != Tok::End)
        throw ParseError(ParseError::Code::UnexpectedToken, rest.off, "trailing input");
    return e;
}

// --------------------------------------------------------------- printing

namespace {

// 1 additive, 2 multiplicative, 3 unary minus, 4 power, 5 atom
int level(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Neg: return 3;
        case ExprKind::Pow: return 4;
        default: return 5;
    }
}

std::string format_number(const Rational& r) {
    if (r.is_integer()) return r.num_str();
    mpz_class den = r.raw().get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 2);
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 5);
        ++fives;
    }
    unsigned places = twos > fives ? twos : fives;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    mpz_class scaled = r.raw().get_num() * scale / r.raw().get_den();
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return digits;
}

void print_rec(const Expr& e, int min_level, std::string& out) {
    bool paren = level(e) < min_level;
    if (paren) out += '(';
    switch (e.kind) {
        case ExprKind::Number: out += format_number(e.value); break;
        case ExprKind::Var: out += e.var; break;
        case ExprKind::Neg:
            out += '-';
            print_rec(*e.a, 3, out);
            break;
        case ExprKind::Add:
            print_rec(*e.a, 1, out);
            out += '+';
            print_rec(*e.b, 2, out);
            break;
        case ExprKind::Sub:
            print_rec(*e.a, 1, out);
            out += '-';
            print_rec(*e.b, 2, out);
            break;
        case ExprKind::Mul:
            print_rec(*e.a, 2, out);
            out += '*';
            print_rec(*e.b, 3, out);
            break;
        case ExprKind::Div:
            print_rec(*e.a, 2, out);
            out += '/';
            print_rec(*e.b, 3, out);
            break;
        case ExprKind::Pow:
            print_rec(*e.a, 5, out);
            out += '^';
            print_rec(*e.b, 3, out);
            break;
        case ExprKind::Call:
            out += func_name(e.func);
            out += '(';
            print_rec(*e.a, 1, out);
            if (e.b) {
                out += ',';
                print_rec(*e.b, 1, out);
            }
            out += ')';
            break;
    }
    if (paren) out += ')';
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::string out;
    print_rec(e, 1, out);
    return out;
}

// ------------------------------------------------------------- evaluation

double eval_f64(const Expr& e, const Bindings& env) {
    switch (e.kind) {
        case ExprKind::Number:
            return e.value.to_double();
        case ExprKind::Var: {
            const auto& slot = e.var == 'n' ? env.n : env.k;
            if (!slot)
                throw EvalError(EvalError::Code::UnboundVariable,
                                std::string("variable ") + e.var + " is not bound");
            return static_cast<double>(*slot);
        }
        case ExprKind::Neg:
            return -eval_f64(*e.a, env);
        case ExprKind::Add:
            return eval_f64(*e.a, env) + eval_f64(*e.b, env);
        case ExprKind::Sub:
            return eval_f64(*e.a, env) - eval_f64(*e.b, env);
        case ExprKind::Mul:
            return eval_f64(*e.a, env) * eval_f64(*e.b, env);
        case ExprKind::Div: {
            double d = eval_f64(*e.b, env);
            if (d == 0.0) throw EvalError(EvalError::Code::DivisionByZero, "division by zero");
            return eval_f64(*e.a, env) / d;
        }
        case ExprKind::Pow: {
            double base = eval_f64(*e.a, env);
            double ex = eval_f64(*e.b, env);
            if (base == 0.0 && ex < 0.0)
                throw EvalError(EvalError::Code::DivisionByZero, "zero base with negative exponent");
            double r = std::pow(base, ex);
            if (std::isnan(r))
                throw EvalError(EvalError::Code::DomainError,
                                "negative base with non-integer exponent");
            return r;
        }
        case ExprKind::Call: {
            double x = eval_f64(*e.a, env);
            switch (e.func) {
                case Func::Log:
                    if (x <= 0.0)
                        throw EvalError(EvalError::Code::DomainError, "log of a nonpositive value");
                    return std::log(x);
                case Func::Exp:
                    return std::exp(x);
                case Func::Sqrt:
                    if (x < 0.0)
                        throw EvalError(EvalError::Code::DomainError, "sqrt of a negative value");
                    return std::sqrt(x);
                case Func::Abs:
                    return std::fabs(x);
                case Func::Min:
                    return std::fmin(x, eval_f64(*e.b, env));
                case Func::Max:
                    return std::fmax(x, eval_f64(*e.b, env));
            }
            break;
        }
    }
    throw EvalError(EvalError::Code::DomainError, "malformed expression node");
}

Rational eval_exact(const Expr& e, const Bindings& env) {
    switch (e.kind) {
        case ExprKind::Number:
            return e.value;
        case ExprKind::Var: {
            const auto& slot = e.var == 'n' ? env.n : env.k;
            if (!slot)
                throw EvalError(EvalError::Code::UnboundVariable,
                                std::string("variable ") + e.var + " is not bound");
            return Rational(*slot);
        }
        case ExprKind::Neg:
            return -eval_exact(*e.a, env);
        case ExprKind::Add:
            return eval_exact(*e.a, env) + eval_exact(*e.b, env);
        case ExprKind::Sub:
            return eval_exact(*e.a, env) - eval_exact(*e.b, env);
        case ExprKind::Mul:
            return eval_exact(*e.a, env) * eval_exact(*e.b, env);
        case ExprKind::Div:
            return eval_exact(*e.a, env) / eval_exact(*e.b, env);
        case ExprKind::Pow: {
            Rational ex = eval_exact(*e.b, env);
            if (!ex.is_integer())
                throw EvalError(EvalError::Code::RationalUnsupported,
                                "exponent " + ex.to_string() + " is not an integer; exact mode needs integer powers");
            return pow_int(eval_exact(*e.a, env), ex.to_integer());
        }
        case ExprKind::Call: {
            switch (e.func) {
                case Func::Log:
                case Func::Exp:
                case Func::Sqrt:
                    throw EvalError(EvalError::Code::RationalUnsupported,
                                    std::string(func_name(e.func)) + " is not available in exact mode");
                case Func::Abs:
                    return abs(eval_exact(*e.a, env));
                case Func::Min: {
                    Rational x = eval_exact(*e.a, env);
                    Rational y = eval_exact(*e.b, env);
                    return x <= y ? x : y;
                }
                case Func::Max: {
                    Rational x = eval_exact(*e.a, env);
                    Rational y = eval_exact(*e.b, env);
                    return x >= y ? x : y;
                }
            }
            break;
        }
    }
    throw EvalError(EvalError::Code::DomainError, "malformed expression node");
}

namespace {

bool contains_var(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Number: return false;
        case ExprKind::Var: return true;
        case ExprKind::Neg: return contains_var(*e.a);
        case ExprKind::Call: return contains_var(*e.a) || (e.b && contains_var(*e.b));
        default: return contains_var(*e.a) || contains_var(*e.b);
    }
}

}  // namespace

bool certainly_not_exact(const Expr& e, std::string* why) {
    switch (e.kind) {
        case ExprKind::Number:
        case ExprKind::Var:
            return false;
        case ExprKind::Neg:
            return certainly_not_exact(*e.a, why);
        case ExprKind::Call:
            if (e.func == Func::Log || e.func == Func::Exp || e.func == Func::Sqrt) {
                if (why) *why = std::string(func_name(e.func)) + " is not available in exact mode";
                return true;
            }
            return certainly_not_exact(*e.a, why) || (e.b && certainly_not_exact(*e.b, why));
        case ExprKind::Pow: {
            if (certainly_not_exact(*e.a, why) || certainly_not_exact(*e.b, why)) return true;
            if (!contains_var(*e.b)) {
                try {
                    Rational ex = eval_exact(*e.b, Bindings{});
                    if (!ex.is_integer()) {
                        if (why) *why = "constant exponent " + ex.to_string() + " is not an integer";
                        return true;
                    }
                } catch (const EvalError& err) {
                    if (err.code() == EvalError::Code::RationalUnsupported) {
                        if (why) *why = err.what();
                        return true;
                    }
                    // other failures (division by zero, ...) surface at eval time
                }
            }
            return false;
        }
        default:
            return certainly_not_exact(*e.a, why) || certainly_not_exact(*e.b, why);
    }
}

}  // namespace seqspace

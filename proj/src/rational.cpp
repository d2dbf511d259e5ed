#include "seqspace/rational.hpp"

#include <cctype>
#include <ostream>

namespace seqspace {

Rational Rational::parse(const std::string& text) {
    auto bad = [&](const char* why) {
        return ValidationError(ValidationError::Code::InvalidSpec,
                               std::string("bad rational literal \"") + text + "\": " + why);
    };
    if (text.empty()) throw bad("empty");

    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = (text[i] == '-');
        ++i;
    }
    std::size_t digits_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_start) throw bad("expected digits");
    std::string int_part = text.substr(digits_start, i - digits_start);

    mpq_class value;
    bool allow_exponent = true;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start || i != text.size()) throw bad("expected denominator digits");
        std::string den_part = text.substr(den_start);
        mpz_class den(den_part, 10);  // base 0 would read a leading zero as octal
        if (den == 0) throw EvalError(EvalError::Code::DivisionByZero, "rational with zero denominator");
        value = mpq_class(mpz_class(int_part, 10), den);
        allow_exponent = false;
    } else if (i < text.size() && text[i] == '.') {
        ++i;
        std::size_t frac_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == frac_start) throw bad("expected fractional digits");
        std::string frac_part = text.substr(frac_start, i - frac_start);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        value = mpq_class(mpz_class(int_part, 10) * scale + mpz_class(frac_part, 10), scale);
    } else {
        value = mpq_class(mpz_class(int_part, 10));
    }
    if (allow_exponent && i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_neg = (text[i] == '-');
            ++i;
        }
        std::size_t exp_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == exp_start) throw bad("expected exponent digits");
        std::string exp_part = text.substr(exp_start, i - exp_start);
        if (exp_part.size() > 4) throw bad("exponent out of range");
        unsigned long exp = std::stoul(exp_part);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, exp);
        if (exp_neg)
            value /= mpq_class(scale);
        else
            value *= mpq_class(scale);
    }
    if (i != text.size()) throw bad("trailing characters");
    value.canonicalize();
    if (neg) value = -value;
    return Rational(std::move(value));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

long long Rational::to_integer() const {
    if (!is_integer())
        throw EvalError(EvalError::Code::DomainError, "rational " + to_string() + " is not an integer");
    if (!v_.get_num().fits_slong_p())
        throw EvalError(EvalError::Code::DomainError, "integer " + num_str() + " does not fit in 64 bits");
    return v_.get_num().get_si();
}

Rational pow_int(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    bool invert = exp < 0;
    unsigned long long mag = invert ? -static_cast<unsigned long long>(exp) : static_cast<unsigned long long>(exp);
    if (mag > (1ull << 24))
        throw EvalError(EvalError::Code::DomainError,
                        "exponent magnitude " + std::to_string(mag) + " too large for exact mode");
    if (invert && base.v_ == 0)
        throw EvalError(EvalError::Code::DivisionByZero, "zero raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), static_cast<unsigned long>(mag));
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), static_cast<unsigned long>(mag));
    mpq_class out = invert ? mpq_class(den, num) : mpq_class(num, den);
    out.canonicalize();
    return Rational(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational sum_pairwise(std::vector<Rational> terms) {
    if (terms.empty()) return Rational(0);
    while (terms.size() > 1) {
        std::size_t half = (terms.size() + 1) / 2;
        for (std::size_t i = 0; i < half; ++i) {
            std::size_t lo = 2 * i;
            terms[i] = lo + 1 < terms.size() ? terms[lo] + terms[lo + 1] : terms[lo];
        }
        terms.resize(half);
    }
    return terms.front();
}

}  // namespace seqspace

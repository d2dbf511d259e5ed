#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seqspace/errors.hpp"

namespace seqspace {

/// Arbitrary-precision rational, a thin wrapper over GMP's mpq_class.
/// Always kept in canonical form (reduced, positive denominator).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw EvalError(EvalError::Code::DivisionByZero, "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rational(mpq_class&& v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "123", "-4/6" or "2.75". Decimal digits become an exact fraction.
    static Rational parse(const std::string& text);

    const mpq_class& raw() const noexcept { return v_; }

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    /// "n" when the denominator is 1, otherwise "n/d".
    std::string to_string() const;

    double to_double() const { return v_.get_d(); }

    bool is_integer() const { return v_.get_den() == 1; }
    /// Only valid when is_integer() and the value fits in 64 bits.
    long long to_integer() const;
    bool fits_integer() const { return is_integer() && v_.get_num().fits_slong_p(); }

    int sign() const { return sgn(v_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.v_ == 0) throw EvalError(EvalError::Code::DivisionByZero, "rational division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

    /// Integer power. Negative exponents invert; 0^negative throws.
    friend Rational pow_int(const Rational& base, long long exp);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Pairwise (balanced-tree) sum. Same exact value as a left fold, but keeps
/// intermediate denominators small, which matters for long sums.
Rational sum_pairwise(std::vector<Rational> terms);

}  // namespace seqspace

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace seqspace {

/// Error raised while parsing an expression or an inline spec string.
/// `offset` is the byte position in the input where the problem was found.
class ParseError : public std::runtime_error {
public:
    enum class Code {
        EmptyInput,
        UnbalancedParen,
        UnknownIdentifier,
        InvalidNumber,
        UnexpectedToken,
    };

    ParseError(Code code, std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          code_(code),
          offset_(offset) {}

    Code code() const noexcept { return code_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    Code code_;
    std::size_t offset_;
};

/// Error raised while evaluating an expression.
class EvalError : public std::runtime_error {
public:
    enum class Code {
        DivisionByZero,
        DomainError,          // log/sqrt of a nonpositive value, 0^negative, ...
        RationalUnsupported,  // log/exp/sqrt or non-integer exponent in exact mode
        UnboundVariable,
    };

    EvalError(Code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Code code() const noexcept { return code_; }

private:
    Code code_;
};

/// Error raised when an input fails a structural or numeric precondition.
class ValidationError : public std::runtime_error {
public:
    enum class Code {
        NonPositive,          // lambda_k <= 0
        NotIncreasing,        // lambda_k >= lambda_{k+1}
        NonPositiveExponent,  // p_k <= 0
        ExceedsDeclaredBound, // p_k above the declared sup
        NotNondecreasing,     // q must be nondecreasing
        HypothesisViolated,   // theorem hypothesis fails on sampled data
        MixedExponents,       // neither p>1 everywhere nor p<1 everywhere
        ConjugateUndefined,   // conjugate exponent requested for p_k <= 1
        UnsupportedCondition, // condition id outside 4.6..4.21
        BruteForceTooLarge,   // subset enumeration over more than 20 entries
        InvalidSpec,          // malformed sequence/matrix spec
        InvalidHorizon,
    };

    ValidationError(Code code, const std::string& what, std::int64_t index = -1)
        : std::runtime_error(what), code_(code), index_(index) {}

    Code code() const noexcept { return code_; }
    /// Index of the first offending element, or -1 when not index-specific.
    std::int64_t index() const noexcept { return index_; }

private:
    Code code_;
    std::int64_t index_;
};

}  // namespace seqspace

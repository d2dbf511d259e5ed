#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seqspace/expr.hpp"
#include "seqspace/scalar.hpp"

namespace seqspace {

using Index = std::int64_t;

/// Continuation of an explicit prefix beyond its last listed entry.
struct Tail {
    enum class Rule { Zero, Constant, RepeatLast };
    Rule rule = Rule::Zero;
    Rational constant;

    static Tail zero() { return {Rule::Zero, Rational(0)}; }
    static Tail constant_of(Rational c) { return {Rule::Constant, std::move(c)}; }
    static Tail repeat_last() { return {Rule::RepeatLast, Rational(0)}; }
};

/// A real sequence given by a closed form in n, an explicit prefix with a
/// tail rule, or values derived from another sequence by a transform.
class SeqSpec {
public:
    enum class Kind { ClosedForm, Explicit, Derived };

    using BatchF64 = std::function<std::vector<double>(Index)>;
    using BatchExact = std::function<std::vector<Rational>(Index)>;

    static SeqSpec closed_form(ExprPtr expr);
    static SeqSpec closed_form(const std::string& expr_text);
    static SeqSpec explicit_list(std::vector<Rational> prefix, Tail tail = Tail::zero());
    /// Used by the transform layer; the callables produce values 0..N.
    static SeqSpec derived(std::string tag, BatchF64 f64, BatchExact exact);

    Kind kind() const noexcept { return kind_; }
    const std::string& tag() const noexcept { return tag_; }
    const ExprPtr& expr() const noexcept { return expr_; }
    const std::vector<Rational>& prefix() const noexcept { return prefix_; }
    const Tail& tail() const noexcept { return tail_; }

    double value_f64(Index n) const;
    Rational value_exact(Index n) const;

    /// Values 0..N inclusive.
    std::vector<double> values_f64(Index N) const;
    std::vector<Rational> values_exact(Index N) const;

    template <class T>
    std::vector<T> values(Index N) const;

    /// Static screen: certain to fail in exact mode (log/exp/sqrt, constant
    /// non-integer exponent). Derived specs delegate to their source.
    bool certainly_not_exact(std::string* why = nullptr) const;

private:
    SeqSpec() = default;

    Kind kind_ = Kind::ClosedForm;
    std::string tag_;
    ExprPtr expr_;
    std::vector<Rational> prefix_;
    Tail tail_;
    BatchF64 batch_f64_;
    BatchExact batch_exact_;
    bool derived_not_exact_ = false;
    std::string derived_not_exact_why_;

    friend SeqSpec mark_derived_not_exact(SeqSpec, std::string);
};

template <>
inline std::vector<double> SeqSpec::values<double>(Index N) const { return values_f64(N); }
template <>
inline std::vector<Rational> SeqSpec::values<Rational>(Index N) const { return values_exact(N); }

/// Flags a derived spec whose source cannot run in exact mode.
SeqSpec mark_derived_not_exact(SeqSpec spec, std::string why);

/// Outcome of sampling a candidate weight sequence over a finite horizon.
struct LambdaReport {
    bool ok = false;
    std::string issue;            // empty when ok
    Index index = -1;             // first offending index, -1 when ok
    double lambda_first = 0.0;
    double lambda_last = 0.0;
    /// Always true: a finite sample cannot certify growth to infinity.
    bool growth_uncertified = true;
};

/// Strictly increasing positive weights with the convention value(-1) = 0.
class LambdaSeq {
public:
    explicit LambdaSeq(SeqSpec spec) : spec_(std::move(spec)) {}

    const SeqSpec& spec() const noexcept { return spec_; }

    /// Positivity and strict increase over [0, horizon]; never throws.
    LambdaReport validate(Index horizon) const;
    /// Same check, throwing ValidationError on the first violation.
    void require_valid(Index horizon) const;

    /// lambda_{-1}, lambda_0, ..., lambda_N (N+2 entries, first is 0).
    template <class T>
    std::vector<T> padded_values(Index N) const;

private:
    SeqSpec spec_;
};

/// Bounded positive exponents with the declared sup H, M = max(1, H),
/// the partition K1 = {p_k <= 1}, K2 = {p_k > 1}, and conjugates on K2.
class ExponentSeq {
public:
    /// declared_sup is the caller's bound H; sampling checks it, it is not
    /// discovered from samples.
    ExponentSeq(SeqSpec spec, double declared_sup);

    const SeqSpec& spec() const noexcept { return spec_; }
    double declared_sup() const noexcept { return declared_sup_; }
    double M() const noexcept { return declared_sup_ > 1.0 ? declared_sup_ : 1.0; }

    /// Checks 0 < p_k <= declared sup for all k in [0, horizon]; throws.
    void require_valid(Index horizon) const;

    double p_f64(Index k) const { return spec_.value_f64(k); }
    Rational p_exact(Index k) const { return spec_.value_exact(k); }

    bool in_K1_f64(Index k) const { return p_f64(k) <= 1.0; }
    bool in_K1_exact(Index k) const { return p_exact(k) <= Rational(1); }

    /// p_k/(p_k - 1); throws ConjugateUndefined when p_k <= 1.
    double conjugate_f64(Index k) const;

private:
    SeqSpec spec_;
    double declared_sup_;
};

/// Infinite matrix: closed form in (n,k), triangular closed form
/// (exact zero above the diagonal), or bands at fixed offsets k - n.
class MatrixSpec {
public:
    enum class Form { ClosedForm, Triangle, Banded };

    struct Band {
        Index offset;  // k - n
        ExprPtr expr;
    };

    static MatrixSpec closed_form(ExprPtr expr);
    static MatrixSpec triangle(ExprPtr expr);
    static MatrixSpec banded(std::vector<Band> bands);

    Form form() const noexcept { return form_; }
    const ExprPtr& expr() const noexcept { return expr_; }
    const std::vector<Band>& bands() const noexcept { return bands_; }

    double entry_f64(Index n, Index k) const;
    Rational entry_exact(Index n, Index k) const;

    template <class T>
    T entry(Index n, Index k) const;

    /// Row n, columns 0..kmax inclusive.
    std::vector<double> row_f64(Index n, Index kmax) const;
    std::vector<Rational> row_exact(Index n, Index kmax) const;

    bool certainly_not_exact(std::string* why = nullptr) const;

private:
    MatrixSpec() = default;

    Form form_ = Form::ClosedForm;
    ExprPtr expr_;
    std::vector<Band> bands_;
};

template <>
inline double MatrixSpec::entry<double>(Index n, Index k) const { return entry_f64(n, k); }
template <>
inline Rational MatrixSpec::entry<Rational>(Index n, Index k) const { return entry_exact(n, k); }

/// Dense rectangular table with flat storage, rows 0..nmax, cols 0..kmax.
template <class T>
class Table {
public:
    Table() = default;
    Table(Index rows, Index cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), fill) {}

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    T& at(Index n, Index k) { return data_[static_cast<std::size_t>(n * cols_ + k)]; }
    const T& at(Index n, Index k) const { return data_[static_cast<std::size_t>(n * cols_ + k)]; }

private:
    Index rows_ = 0;
    Index cols_ = 0;
    std::vector<T> data_;
};

// JSON spec loading: {"kind":"expr","expr":"1/(n+1)"}
//                  | {"kind":"list","values":[...],"tail":{"rule":...}}
//                  | {"kind":"matrix","form":"closed"|"triangle","expr":"..."}
//                  | {"kind":"matrix","form":"banded","bands":[{"offset":d,"expr":"..."}]}
SeqSpec parse_seq_spec(const nlohmann::json& j);
MatrixSpec parse_matrix_spec(const nlohmann::json& j);
Rational parse_rational_json(const nlohmann::json& j);

}  // namespace seqspace

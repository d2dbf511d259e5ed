#include "seqspace/specs.hpp"

#include <cmath>

#include "seqspace/errors.hpp"
#include "seqspace/utils.hpp"

namespace seqspace {

namespace {

ValidationError bad_spec(const std::string& why) {
    return ValidationError(ValidationError::Code::InvalidSpec, why);
}

// Sequence expressions may be written in either index letter.
Bindings index_bindings(Index i) {
    Bindings b;
    b.n = i;
    b.k = i;
    return b;
}

}  // namespace

SeqSpec SeqSpec::closed_form(ExprPtr expr) {
    SeqSpec s;
    s.kind_ = Kind::ClosedForm;
    s.expr_ = std::move(expr);
    return s;
}

SeqSpec SeqSpec::closed_form(const std::string& expr_text) {
    return closed_form(parse_expr(expr_text));
}

SeqSpec SeqSpec::explicit_list(std::vector<Rational> prefix, Tail tail) {
    if (tail.rule == Tail::Rule::RepeatLast && prefix.empty())
        throw bad_spec("repeat-last tail needs a nonempty prefix");
    SeqSpec s;
    s.kind_ = Kind::Explicit;
    s.prefix_ = std::move(prefix);
    s.tail_ = std::move(tail);
    return s;
}

SeqSpec SeqSpec::derived(std::string tag, BatchF64 f64, BatchExact exact) {
    SeqSpec s;
    s.kind_ = Kind::Derived;
    s.tag_ = std::move(tag);
    s.batch_f64_ = std::move(f64);
    s.batch_exact_ = std::move(exact);
    return s;
}

SeqSpec mark_derived_not_exact(SeqSpec spec, std::string why) {
    spec.derived_not_exact_ = true;
    spec.derived_not_exact_why_ = std::move(why);
    return spec;
}

double SeqSpec::value_f64(Index n) const {
    switch (kind_) {
        case Kind::ClosedForm:
            return eval_f64(*expr_, index_bindings(n));
        case Kind::Explicit: {
            if (n < static_cast<Index>(prefix_.size())) return prefix_[static_cast<std::size_t>(n)].to_double();
            switch (tail_.rule) {
                case Tail::Rule::Zero: return 0.0;
                case Tail::Rule::Constant: return tail_.constant.to_double();
                case Tail::Rule::RepeatLast: return prefix_.back().to_double();
            }
            return 0.0;
        }
        case Kind::Derived:
            return batch_f64_(n)[static_cast<std::size_t>(n)];
    }
    throw bad_spec("malformed sequence spec");
}

Rational SeqSpec::value_exact(Index n) const {
    switch (kind_) {
        case Kind::ClosedForm:
            return eval_exact(*expr_, index_bindings(n));
        case Kind::Explicit: {
            if (n < static_cast<Index>(prefix_.size())) return prefix_[static_cast<std::size_t>(n)];
            switch (tail_.rule) {
                case Tail::Rule::Zero: return Rational(0);
                case Tail::Rule::Constant: return tail_.constant;
                case Tail::Rule::RepeatLast: return prefix_.back();
            }
            return Rational(0);
        }
        case Kind::Derived:
            if (derived_not_exact_)
                throw EvalError(EvalError::Code::RationalUnsupported, derived_not_exact_why_);
            return batch_exact_(n)[static_cast<std::size_t>(n)];
    }
    throw bad_spec("malformed sequence spec");
}

std::vector<double> SeqSpec::values_f64(Index N) const {
    if (N < 0) throw ValidationError(ValidationError::Code::InvalidHorizon, "horizon must be >= 0");
    if (kind_ == Kind::Derived) return batch_f64_(N);
    std::vector<double> out(static_cast<std::size_t>(N) + 1);
    if (kind_ == Kind::ClosedForm) {
        parallel_for(N + 1, [&](Index i) { out[static_cast<std::size_t>(i)] = value_f64(i); });
    } else {
        for (Index i = 0; i <= N; ++i) out[static_cast<std::size_t>(i)] = value_f64(i);
    }
    return out;
}

std::vector<Rational> SeqSpec::values_exact(Index N) const {
    if (N < 0) throw ValidationError(ValidationError::Code::InvalidHorizon, "horizon must be >= 0");
    if (kind_ == Kind::Derived) {
        if (derived_not_exact_)
            throw EvalError(EvalError::Code::RationalUnsupported, derived_not_exact_why_);
        return batch_exact_(N);
    }
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (Index i = 0; i <= N; ++i) out.push_back(value_exact(i));
    return out;
}

bool SeqSpec::certainly_not_exact(std::string* why) const {
    switch (kind_) {
        case Kind::ClosedForm:
            return seqspace::certainly_not_exact(*expr_, why);
        case Kind::Explicit:
            return false;
        case Kind::Derived:
            if (derived_not_exact_ && why) *why = derived_not_exact_why_;
            return derived_not_exact_;
    }
    return false;
}

// ---------------------------------------------------------------- lambda

LambdaReport LambdaSeq::validate(Index horizon) const {
    LambdaReport rep;
    if (horizon < 1) {
        rep.issue = "horizon must be >= 1";
        return rep;
    }
    bool exact = !spec_.certainly_not_exact();
    if (exact) {
        try {
            std::vector<Rational> v = spec_.values_exact(horizon);
            rep.lambda_first = v.front().to_double();
            rep.lambda_last = v.back().to_double();
            for (Index i = 0; i <= horizon; ++i) {
                if (!(v[static_cast<std::size_t>(i)] > Rational(0))) {
                    rep.issue = "NonPositive";
                    rep.index = i;
                    return rep;
                }
                if (i > 0 && !(v[static_cast<std::size_t>(i - 1)] < v[static_cast<std::size_t>(i)])) {
                    rep.issue = "NotIncreasing";
                    rep.index = i;
                    return rep;
                }
            }
            rep.ok = true;
            return rep;
        } catch (const EvalError&) {
            // fall through to the float sample
        }
    }
    std::vector<double> v = spec_.values_f64(horizon);
    rep.lambda_first = v.front();
    rep.lambda_last = v.back();
    for (Index i = 0; i <= horizon; ++i) {
        double x = v[static_cast<std::size_t>(i)];
        if (!(x > 0.0) || !std::isfinite(x)) {
            rep.issue = "NonPositive";
            rep.index = i;
            return rep;
        }
        if (i > 0 && !(v[static_cast<std::size_t>(i - 1)] < x)) {
            rep.issue = "NotIncreasing";
            rep.index = i;
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

void LambdaSeq::require_valid(Index horizon) const {
    LambdaReport rep = validate(horizon);
    if (rep.ok) return;
    if (rep.issue == "NonPositive")
        throw ValidationError(ValidationError::Code::NonPositive,
                              "weight at index " + std::to_string(rep.index) + " is not positive",
                              rep.index);
    if (rep.issue == "NotIncreasing")
        throw ValidationError(ValidationError::Code::NotIncreasing,
                              "weights not strictly increasing at index " + std::to_string(rep.index),
                              rep.index);
    throw ValidationError(ValidationError::Code::InvalidHorizon, rep.issue);
}

template <class T>
std::vector<T> LambdaSeq::padded_values(Index N) const {
    std::vector<T> body = spec_.values<T>(N);
    std::vector<T> out;
    out.reserve(body.size() + 1);
    out.push_back(T(0));
    out.insert(out.end(), body.begin(), body.end());
    return out;
}

template std::vector<double> LambdaSeq::padded_values<double>(Index) const;
template std::vector<Rational> LambdaSeq::padded_values<Rational>(Index) const;

// -------------------------------------------------------------- exponents

ExponentSeq::ExponentSeq(SeqSpec spec, double declared_sup)
    : spec_(std::move(spec)), declared_sup_(declared_sup) {
    if (!std::isfinite(declared_sup_) || declared_sup_ <= 0.0)
        throw ValidationError(ValidationError::Code::NonPositiveExponent,
                              "declared exponent bound must be a positive finite number");
}

void ExponentSeq::require_valid(Index horizon) const {
    std::vector<double> v = spec_.values_f64(horizon);
    for (Index k = 0; k <= horizon; ++k) {
        double p = v[static_cast<std::size_t>(k)];
        if (!(p > 0.0) || !std::isfinite(p))
            throw ValidationError(ValidationError::Code::NonPositiveExponent,
                                  "exponent at index " + std::to_string(k) + " is not positive", k);
        if (p > declared_sup_)
            throw ValidationError(ValidationError::Code::ExceedsDeclaredBound,
                                  "exponent at index " + std::to_string(k) + " exceeds the declared bound " +
                                      std::to_string(declared_sup_),
                                  k);
    }
}

double ExponentSeq::conjugate_f64(Index k) const {
    double p = p_f64(k);
    if (p <= 1.0)
        throw ValidationError(ValidationError::Code::ConjugateUndefined,
                              "conjugate exponent undefined at index " + std::to_string(k) +
                                  " (p <= 1)",
                              k);
    return p / (p - 1.0);
}

// ---------------------------------------------------------------- matrix

MatrixSpec MatrixSpec::closed_form(ExprPtr expr) {
    MatrixSpec m;
    m.form_ = Form::ClosedForm;
    m.expr_ = std::move(expr);
    return m;
}

MatrixSpec MatrixSpec::triangle(ExprPtr expr) {
    MatrixSpec m;
    m.form_ = Form::Triangle;
    m.expr_ = std::move(expr);
    return m;
}

MatrixSpec MatrixSpec::banded(std::vector<Band> bands) {
    for (std::size_t i = 0; i < bands.size(); ++i)
        for (std::size_t j = i + 1; j < bands.size(); ++j)
            if (bands[i].offset == bands[j].offset)
                throw bad_spec("duplicate band offset " + std::to_string(bands[i].offset));
    MatrixSpec m;
    m.form_ = Form::Banded;
    m.bands_ = std::move(bands);
    return m;
}

double MatrixSpec::entry_f64(Index n, Index k) const {
    Bindings env;
    env.n = n;
    env.k = k;
    switch (form_) {
        case Form::ClosedForm:
            return eval_f64(*expr_, env);
        case Form::Triangle:
            return k > n ? 0.0 : eval_f64(*expr_, env);
        case Form::Banded:
            for (const Band& b : bands_)
                if (k - n == b.offset) return eval_f64(*b.expr, env);
            return 0.0;
    }
    throw bad_spec("malformed matrix spec");
}

Rational MatrixSpec::entry_exact(Index n, Index k) const {
    Bindings env;
    env.n = n;
    env.k = k;
    switch (form_) {
        case Form::ClosedForm:
            return eval_exact(*expr_, env);
        case Form::Triangle:
            return k > n ? Rational(0) : eval_exact(*expr_, env);
        case Form::Banded:
            for (const Band& b : bands_)
                if (k - n == b.offset) return eval_exact(*b.expr, env);
            return Rational(0);
    }
    throw bad_spec("malformed matrix spec");
}

std::vector<double> MatrixSpec::row_f64(Index n, Index kmax) const {
    std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
    for (Index k = 0; k <= kmax; ++k) out[static_cast<std::size_t>(k)] = entry_f64(n, k);
    return out;
}

std::vector<Rational> MatrixSpec::row_exact(Index n, Index kmax) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(kmax) + 1);
    for (Index k = 0; k <= kmax; ++k) out.push_back(entry_exact(n, k));
    return out;
}

bool MatrixSpec::certainly_not_exact(std::string* why) const {
    if (expr_ && seqspace::certainly_not_exact(*expr_, why)) return true;
    for (const Band& b : bands_)
        if (seqspace::certainly_not_exact(*b.expr, why)) return true;
    return false;
}

// ------------------------------------------------------------------ JSON

Rational parse_rational_json(const nlohmann::json& j) {
    if (j.is_object()) {
        // the num/den object form the reports emit
        if (!j.contains("num") || !j.contains("den"))
            throw bad_spec("rational object needs \"num\" and \"den\"");
        Rational den = parse_rational_json(j["den"]);
        if (den == Rational(0)) throw bad_spec("rational with zero denominator");
        return parse_rational_json(j["num"]) / den;
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        std::uint64_t u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(INT64_MAX)) throw bad_spec("integer too large");
        return Rational(static_cast<long long>(u));
    }
    if (j.is_number_float()) {
        double d = j.get<double>();
        if (!std::isfinite(d)) throw bad_spec("non-finite number in spec");
        return Rational(mpq_class(d));  // exact binary value; prefer strings for decimals
    }
    throw bad_spec("expected a number or a numeric string");
}

namespace {

Tail parse_tail(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rule") || !j["rule"].is_string())
        throw bad_spec("tail must be an object with a \"rule\" string");
    std::string rule = j["rule"].get<std::string>();
    if (rule == "zero") return Tail::zero();
    if (rule == "repeat-last") return Tail::repeat_last();
    if (rule == "constant") {
        if (!j.contains("value")) throw bad_spec("constant tail needs a \"value\"");
        return Tail::constant_of(parse_rational_json(j["value"]));
    }
    throw bad_spec("unknown tail rule \"" + rule + "\"");
}

std::string require_string(const nlohmann::json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_string())
        throw bad_spec(std::string(what) + " needs a \"" + key + "\" string");
    return j[key].get<std::string>();
}

}  // namespace

SeqSpec parse_seq_spec(const nlohmann::json& j) {
    if (j.is_string()) return SeqSpec::closed_form(j.get<std::string>());
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw bad_spec("sequence spec must be an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "expr") return SeqSpec::closed_form(require_string(j, "expr", "expr spec"));
    if (kind == "list") {
        if (!j.contains("values") || !j["values"].is_array())
            throw bad_spec("list spec needs a \"values\" array");
        std::vector<Rational> prefix;
        prefix.reserve(j["values"].size());
        for (const auto& v : j["values"]) prefix.push_back(parse_rational_json(v));
        Tail tail = j.contains("tail") ? parse_tail(j["tail"]) : Tail::zero();
        return SeqSpec::explicit_list(std::move(prefix), std::move(tail));
    }
    if (kind == "matrix") throw bad_spec("expected a sequence spec, got a matrix spec");
    throw bad_spec("unknown sequence spec kind \"" + kind + "\"");
}

MatrixSpec parse_matrix_spec(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw bad_spec("matrix spec must be an object with a \"kind\" string");
    if (j["kind"].get<std::string>() != "matrix")
        throw bad_spec("matrix spec must have kind \"matrix\"");
    std::string form = require_string(j, "form", "matrix spec");
    if (form == "closed") return MatrixSpec::closed_form(parse_expr(require_string(j, "expr", "closed matrix")));
    if (form == "triangle") return MatrixSpec::triangle(parse_expr(require_string(j, "expr", "triangle matrix")));
    if (form == "banded") {
        if (!j.contains("bands") || !j["bands"].is_array() || j["bands"].empty())
            throw bad_spec("banded matrix needs a nonempty \"bands\" array");
        std::vector<MatrixSpec::Band> bands;
        for (const auto& b : j["bands"]) {
            if (!b.is_object() || !b.contains("offset") || !b["offset"].is_number_integer())
                throw bad_spec("band needs an integer \"offset\"");
            bands.push_back({b["offset"].get<std::int64_t>(),
                             parse_expr(require_string(b, "expr", "band"))});
        }
        return MatrixSpec::banded(std::move(bands));
    }
    throw bad_spec("unknown matrix form \"" + form + "\"");
}

}  // namespace seqspace

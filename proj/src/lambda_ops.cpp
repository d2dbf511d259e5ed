#include "seqspace/lambda_ops.hpp"

#include <string>

#include "seqspace/errors.hpp"

namespace seqspace {

template <class T>
T lambda_entry(const LambdaSeq& lambda, Index n, Index k) {
    if (n < 0 || k < 0)
        throw ValidationError(ValidationError::Code::InvalidHorizon, "indices must be >= 0");
    if (k > n) return T(0);
    const SeqSpec& s = lambda.spec();
    T prev = k == 0 ? T(0) : spec_value<T>(s, k - 1);
    return (spec_value<T>(s, k) - prev) / spec_value<T>(s, n);
}

template double lambda_entry<double>(const LambdaSeq&, Index, Index);
template Rational lambda_entry<Rational>(const LambdaSeq&, Index, Index);

template <class T>
std::vector<T> lambda_transform_values(const std::vector<T>& padded, const std::vector<T>& x) {
    std::vector<T> y(x.size());
    T c(0);
    for (std::size_t n = 0; n < x.size(); ++n) {
        c += (padded[n + 1] - padded[n]) * x[n];
        y[n] = c / padded[n + 1];
    }
    return y;
}

template <class T>
std::vector<T> inverse_transform_values(const std::vector<T>& padded, const std::vector<T>& y) {
    std::vector<T> x(y.size());
    for (std::size_t n = 0; n < y.size(); ++n) {
        T prev_term = n == 0 ? T(0) : padded[n] * y[n - 1];
        x[n] = (padded[n + 1] * y[n] - prev_term) / (padded[n + 1] - padded[n]);
    }
    return x;
}

template <class T>
std::vector<T> s_operator_values(const std::vector<T>& padded, const std::vector<T>& x) {
    std::vector<T> s(x.size());
    if (x.empty()) return s;
    s[0] = T(0);
    T d(0);
    for (std::size_t n = 1; n < x.size(); ++n) {
        d += padded[n] * (x[n] - x[n - 1]);
        s[n] = d / padded[n + 1];
    }
    return s;
}

template std::vector<double> lambda_transform_values<double>(const std::vector<double>&, const std::vector<double>&);
template std::vector<Rational> lambda_transform_values<Rational>(const std::vector<Rational>&, const std::vector<Rational>&);
template std::vector<double> inverse_transform_values<double>(const std::vector<double>&, const std::vector<double>&);
template std::vector<Rational> inverse_transform_values<Rational>(const std::vector<Rational>&, const std::vector<Rational>&);
template std::vector<double> s_operator_values<double>(const std::vector<double>&, const std::vector<double>&);
template std::vector<Rational> s_operator_values<Rational>(const std::vector<Rational>&, const std::vector<Rational>&);

template <class T>
std::vector<T> lambda_transform(const LambdaSeq& lambda, const SeqSpec& x, Index N) {
    return lambda_transform_values(lambda.padded_values<T>(N), x.values<T>(N));
}

template <class T>
std::vector<T> inverse_transform(const LambdaSeq& lambda, const SeqSpec& y, Index N) {
    return inverse_transform_values(lambda.padded_values<T>(N), y.values<T>(N));
}

template <class T>
std::vector<T> s_operator(const LambdaSeq& lambda, const SeqSpec& x, Index N) {
    return s_operator_values(lambda.padded_values<T>(N), x.values<T>(N));
}

template std::vector<double> lambda_transform<double>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<Rational> lambda_transform<Rational>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<double> inverse_transform<double>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<Rational> inverse_transform<Rational>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<double> s_operator<double>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<Rational> s_operator<Rational>(const LambdaSeq&, const SeqSpec&, Index);

template <class T>
std::vector<T> lambda_transform_direct(const LambdaSeq& lambda, const SeqSpec& x, Index N) {
    std::vector<T> padded = lambda.padded_values<T>(N);
    std::vector<T> xs = x.values<T>(N);
    std::vector<T> y(xs.size());
    for (std::size_t n = 0; n < xs.size(); ++n) {
        T acc(0);
        for (std::size_t k = 0; k <= n; ++k) acc += (padded[k + 1] - padded[k]) * xs[k];
        y[n] = acc / padded[n + 1];
    }
    return y;
}

template <class T>
std::vector<T> s_operator_direct(const LambdaSeq& lambda, const SeqSpec& x, Index N) {
    std::vector<T> padded = lambda.padded_values<T>(N);
    std::vector<T> xs = x.values<T>(N);
    std::vector<T> s(xs.size());
    for (std::size_t n = 0; n < xs.size(); ++n) {
        T acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += padded[k] * (xs[k] - xs[k - 1]);
        s[n] = acc / padded[n + 1];
    }
    return s;
}

template std::vector<double> lambda_transform_direct<double>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<Rational> lambda_transform_direct<Rational>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<double> s_operator_direct<double>(const LambdaSeq&, const SeqSpec&, Index);
template std::vector<Rational> s_operator_direct<Rational>(const LambdaSeq&, const SeqSpec&, Index);

namespace {

SeqSpec make_derived(const char* tag,
                     std::shared_ptr<const LambdaSeq> lambda,
                     std::shared_ptr<const SeqSpec> src,
                     std::vector<double> (*f64)(const LambdaSeq&, const SeqSpec&, Index),
                     std::vector<Rational> (*exact)(const LambdaSeq&, const SeqSpec&, Index)) {
    SeqSpec out = SeqSpec::derived(
        tag,
        [lambda, src, f64](Index N) { return f64(*lambda, *src, N); },
        [lambda, src, exact](Index N) { return exact(*lambda, *src, N); });
    std::string why;
    if (src->certainly_not_exact(&why) || lambda->spec().certainly_not_exact(&why))
        out = mark_derived_not_exact(std::move(out), why);
    return out;
}

}  // namespace

SeqSpec derived_lambda_transform(std::shared_ptr<const LambdaSeq> lambda,
                                 std::shared_ptr<const SeqSpec> x) {
    return make_derived("lambda_transform", std::move(lambda), std::move(x),
                        &lambda_transform<double>, &lambda_transform<Rational>);
}

SeqSpec derived_inverse_transform(std::shared_ptr<const LambdaSeq> lambda,
                                  std::shared_ptr<const SeqSpec> y) {
    return make_derived("inverse_transform", std::move(lambda), std::move(y),
                        &inverse_transform<double>, &inverse_transform<Rational>);
}

SeqSpec derived_s_operator(std::shared_ptr<const LambdaSeq> lambda,
                           std::shared_ptr<const SeqSpec> x) {
    return make_derived("s_operator", std::move(lambda), std::move(x),
                        &s_operator<double>, &s_operator<Rational>);
}

}  // namespace seqspace

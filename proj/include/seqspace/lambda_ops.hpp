#pragma once

#include <memory>
#include <vector>

#include "seqspace/specs.hpp"

namespace seqspace {

template <class T>
T spec_value(const SeqSpec& s, Index i);
template <>
inline double spec_value<double>(const SeqSpec& s, Index i) { return s.value_f64(i); }
template <>
inline Rational spec_value<Rational>(const SeqSpec& s, Index i) { return s.value_exact(i); }

/// Weighted-mean matrix entry: (lambda_k - lambda_{k-1})/lambda_n for
/// 0 <= k <= n, exactly 0 for k > n. Rows telescope to sum 1.
template <class T>
T lambda_entry(const LambdaSeq& lambda, Index n, Index k);

/// y_n = (1/lambda_n) * sum_{k<=n} (lambda_k - lambda_{k-1}) x_k, n = 0..N.
/// Incremental prefix evaluation, O(N) work.
template <class T>
std::vector<T> lambda_transform(const LambdaSeq& lambda, const SeqSpec& x, Index N);

/// Closed-form inverse of the transform:
/// x_n = (lambda_n y_n - lambda_{n-1} y_{n-1})/(lambda_n - lambda_{n-1}).
template <class T>
std::vector<T> inverse_transform(const LambdaSeq& lambda, const SeqSpec& y, Index N);

/// S_0 = 0, S_n = (1/lambda_n) * sum_{k=1..n} lambda_{k-1}(x_k - x_{k-1}).
/// Satisfies S_n = x_n - y_n and, for n >= 1,
/// S_n = (lambda_{n-1}/(lambda_n - lambda_{n-1}))(y_n - y_{n-1}).
template <class T>
std::vector<T> s_operator(const LambdaSeq& lambda, const SeqSpec& x, Index N);

/// O(N^2) cross-check paths evaluating the defining sums directly.
template <class T>
std::vector<T> lambda_transform_direct(const LambdaSeq& lambda, const SeqSpec& x, Index N);
template <class T>
std::vector<T> s_operator_direct(const LambdaSeq& lambda, const SeqSpec& x, Index N);

/// Vector-level cores shared by the sequence ops. `padded` holds
/// lambda_{-1} = 0, lambda_0, ..., lambda_N.
template <class T>
std::vector<T> lambda_transform_values(const std::vector<T>& padded, const std::vector<T>& x);
template <class T>
std::vector<T> inverse_transform_values(const std::vector<T>& padded, const std::vector<T>& y);
template <class T>
std::vector<T> s_operator_values(const std::vector<T>& padded, const std::vector<T>& x);

/// Lazy sequence views of the three transforms, usable wherever a SeqSpec is.
SeqSpec derived_lambda_transform(std::shared_ptr<const LambdaSeq> lambda,
                                 std::shared_ptr<const SeqSpec> x);
SeqSpec derived_inverse_transform(std::shared_ptr<const LambdaSeq> lambda,
                                  std::shared_ptr<const SeqSpec> y);
SeqSpec derived_s_operator(std::shared_ptr<const LambdaSeq> lambda,
                           std::shared_ptr<const SeqSpec> x);

}  // namespace seqspace

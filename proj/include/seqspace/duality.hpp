#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/lambda_ops.hpp"
#include "seqspace/verdict.hpp"

namespace seqspace {

/// Row-pair matrix carrying the term test a_n x_n = (D y)_n:
/// row n holds (-lambda_{n-1} a_n, lambda_n a_n)/(lambda_n - lambda_{n-1})
/// at columns n-1 and n, zero elsewhere.
class DualMatrixD {
public:
    DualMatrixD(std::shared_ptr<const SeqSpec> a, std::shared_ptr<const LambdaSeq> lambda)
        : a_(std::move(a)), lambda_(std::move(lambda)) {}

    const SeqSpec& a() const noexcept { return *a_; }
    const LambdaSeq& lambda() const noexcept { return *lambda_; }

    template <class T>
    T entry(Index n, Index k) const;

    /// Nonzeros of column k: first at row k, second at row k+1.
    template <class T>
    std::pair<T, T> column(Index k) const;

private:
    std::shared_ptr<const SeqSpec> a_;
    std::shared_ptr<const LambdaSeq> lambda_;
};

/// Abel-summed matrix for partial sums sum_{k<=n} a_k x_k = (B y)_n,
/// built from s1_k = (a_k/(l_k - l_{k-1}) - a_{k+1}/(l_{k+1} - l_k)) l_k
/// and s2_k = a_k l_k/(l_k - l_{k-1}).
class DualMatrixB {
public:
    DualMatrixB(std::shared_ptr<const SeqSpec> a, std::shared_ptr<const LambdaSeq> lambda)
        : a_(std::move(a)), lambda_(std::move(lambda)) {}

    const SeqSpec& a() const noexcept { return *a_; }
    const LambdaSeq& lambda() const noexcept { return *lambda_; }

    template <class T>
    T s1(Index k) const;
    template <class T>
    T s2(Index k) const;
    /// s1_k below the diagonal, s2_n on it, zero above.
    template <class T>
    T entry(Index n, Index k) const;

private:
    std::shared_ptr<const SeqSpec> a_;
    std::shared_ptr<const LambdaSeq> lambda_;
};

DualMatrixD build_D(std::shared_ptr<const SeqSpec> a, std::shared_ptr<const LambdaSeq> lambda);
DualMatrixB build_B(std::shared_ptr<const SeqSpec> a, std::shared_ptr<const LambdaSeq> lambda);

/// One half of a dual test: the exponent-by-exponent condition restricted to
/// the indices where p_k <= 1 (sup form) or p_k > 1 (conjugate-sum form).
struct DualPartReport {
    std::string name;               // "k1" or "k2"
    Index indices = 0;              // how many k landed in this part
    Verdict verdict;
    double sup = 0.0;               // deciding probe's sup or partial sum
    Index grid_point = 0;           // M that decided part (ii); 0 for part (i)
    std::vector<Index> grid;        // M grid examined (part (ii) only)
    std::vector<CurvePoint> curve;  // deciding probe's witness curve
};

struct DualReport {
    std::string which;  // alpha | beta | gamma
    Index N = 0;
    DualPartReport part_k1;
    DualPartReport part_k2;
    Verdict combined;
};

/// Membership evidence for a in the alpha-dual: per column k the sign-split
/// subset sup of the two column entries of D, then sup |.|^{p_k} on K1 and
/// an M-grid conjugate-sum search on K2.
DualReport alpha_dual_check(const SeqSpec& a, const LambdaSeq& lambda, const ExponentSeq& p,
                            Index N, const Thresholds& th = {});

/// Membership evidence for a in the beta/gamma-dual via s1, s2: sup form on
/// K1, M-grid summability plus boundedness on K2. The two duals share the
/// same concrete conditions; `which` only labels the report.
DualReport beta_gamma_dual_check(const SeqSpec& a, const LambdaSeq& lambda, const ExponentSeq& p,
                                 Index N, const std::string& which, const Thresholds& th = {});

}  // namespace seqspace

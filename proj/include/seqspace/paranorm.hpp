#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "seqspace/lambda_ops.hpp"
#include "seqspace/verdict.hpp"

namespace seqspace {

struct ParanormReport {
    Index N = 0;
    Mode mode = Mode::Float64;
    Scalar partial_sum = 0.0;    // P_N = sum_{n<=N} |y_n|^{p_n}, exact in exact mode
    double partial_sum_f64 = 0.0;
    double estimate = 0.0;       // P_N^{1/M}
    double M = 1.0;
    Verdict verdict;
    SeriesProbe probe;           // term evidence and the partial-sum curve
    std::string precision_note;  // set when exact mode deferred fractional powers to float
};

/// Sum of |y_n|^{p_n} with verdict: the exponent-weighted sequence space test.
ParanormReport paranorm_ellp(const SeqSpec& y, const ExponentSeq& p, Index N, Mode mode,
                             const Thresholds& th = {});

/// Same report for the weighted-mean transform of x; field-for-field equal
/// to paranorm_ellp applied to that transform.
ParanormReport paranorm_lambda(const SeqSpec& x, const LambdaSeq& lambda, const ExponentSeq& p,
                               Index N, Mode mode, const Thresholds& th = {});

/// Cores over materialized values, shared by the two entry points.
ParanormReport paranorm_values_f64(const std::vector<double>& y, const ExponentSeq& p,
                                   const Thresholds& th, std::string precision_note = {});
ParanormReport paranorm_values_exact(const std::vector<Rational>& y, const ExponentSeq& p,
                                     const Thresholds& th);

enum class SpaceKind { EllP, EllLambda, C0Lambda };
const char* space_name(SpaceKind s);

struct MembershipReport {
    SpaceKind space = SpaceKind::EllP;
    Index N = 0;
    Verdict verdict;
    std::optional<ParanormReport> paranorm;  // for the two series-type spaces
    std::optional<LimitZeroProbe> limit;     // for the tending-to-zero space
};

/// EllP ignores lambda; the two lambda spaces require it.
MembershipReport membership(const SeqSpec& x, SpaceKind space,
                            const std::shared_ptr<const LambdaSeq>& lambda, const ExponentSeq& p,
                            Index N, Mode mode, const Thresholds& th = {});

/// The strict-inclusion witness: p_n = 1 + 1/(n+1) (declared sup 2),
/// y_n = (n+1)^{-1/p_n}, x the inverse transform of y. Then |y_n|^{p_n} =
/// 1/(n+1): the transform of x tends to zero while its exponent series is
/// the harmonic series.
struct Witness {
    SeqSpec x;
    SeqSpec y;
    ExponentSeq p;
};
Witness witness_strict_inclusion(std::shared_ptr<const LambdaSeq> lambda);

struct Thm4Report {
    Index N = 0;
    Verdict x_in_ellp;
    Verdict transform_in_ellp;
    Verdict s_in_ellp;
    bool consistent = true;
    std::string note;
    /// h_N(S x) <= h_N(x) + h_N(transform) and h_N(x) <= h_N(S x) + h_N(transform)
    bool triangle_subadd_ok = true;
    bool triangle_decomp_ok = true;
    Index first_triangle_violation = -1;
};

/// Requires 1 <= p_k over the horizon (HypothesisViolated otherwise).
Thm4Report theorem4_check(const SeqSpec& x, const LambdaSeq& lambda, const ExponentSeq& p,
                          Index N, const Thresholds& th = {});

struct Thm5Report {
    Index N = 0;
    // "i": all exponents > 1, "ii": all < 1
    std::string case_tag = "i";
    Index settle_index = -1;  // first m with |transform_n| < 1 for all n in [m, N]
    bool comparison_vacuous = false;
    double termwise_max_gap = 0.0;  // max violation of the termwise bound; <= 0 when it holds
    bool termwise_ok = true;
    Verdict series_l1;
    Verdict series_lp;
    bool implication_ok = true;
    std::string note;
};

/// Requires all sampled exponents on one side of 1 (MixedExponents otherwise).
Thm5Report theorem5_check(const SeqSpec& x, const LambdaSeq& lambda, const ExponentSeq& p,
                          Index N, const Thresholds& th = {});

}  // namespace seqspace

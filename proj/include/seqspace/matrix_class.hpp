#pragma once

#include <string>
#include <vector>

#include "seqspace/scalar.hpp"
#include "seqspace/specs.hpp"
#include "seqspace/verdict.hpp"

namespace seqspace {

/// Largest |subset sum| of v over all index subsets, computed by sign-split:
/// max(sum of positives, -sum of negatives).
double subset_sup(const std::vector<double>& v);
Rational subset_sup_exact(const std::vector<Rational>& v);

/// Exhaustive check over all 2^m subsets; refuses m > 20.
double brute_force_subset_sup(const std::vector<double>& v);

/// Trailing-window estimate of a column limit.
struct ColumnLimit {
    double value = 0.0;
    double max_deviation = 0.0;
    bool stable = false;
};

/// Dense truncation of the Abel-summed alignment of a matrix A with the
/// Lambda domain: t_nk = (a_nk/(l_k - l_{k-1}) - a_{n,k+1}/(l_{k+1} - l_k)) l_k,
/// together with the row-scaled original entries g_k a_nk,
/// g_k = l_k/(l_k - l_{k-1}). Partial sums against the domain sequence obey
///   sum_{k<=m} a_nk x_k = sum_{k<=m-1} t_nk y_k + g_m a_nm y_m
/// where y is the weighted-mean transform of x.
class TildeMatrix {
public:
    Index N() const noexcept { return N_; }

    double at(Index n, Index k) const;
    double scaled_at(Index n, Index k) const;

    bool exact_available() const noexcept { return exact_; }
    const Rational& at_exact(Index n, Index k) const;
    const Rational& scaled_at_exact(Index n, Index k) const;

    /// Why exact entries are missing after an exact-mode build, empty otherwise.
    const std::string& precision_note() const noexcept { return precision_note_; }

    /// Mean of the trailing rows of column k, flagged unstable when the
    /// deviation within the window exceeds limit_dev_rel * scale.
    ColumnLimit column_limit(Index k, const Thresholds& th = {}) const;

private:
    friend TildeMatrix build_tilde(const MatrixSpec&, const LambdaSeq&, Index, Mode);

    std::size_t idx(Index n, Index k) const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(N_ + 1) +
               static_cast<std::size_t>(k);
    }

    Index N_ = 0;
    std::vector<double> t_;
    std::vector<double> scaled_;
    bool exact_ = false;
    std::vector<Rational> t_exact_;
    std::vector<Rational> scaled_exact_;
    std::string precision_note_;
};

TildeMatrix build_tilde(const MatrixSpec& A, const LambdaSeq& lambda, Index N,
                        Mode mode = Mode::Float64);

/// Outcome of one mapping condition evaluated at truncation N.
struct ConditionResult {
    std::string id;
    Index N = 0;
    Verdict verdict;
    std::vector<Index> grid_M;      // scale grid examined for an exists-M search
    std::vector<Index> grid_L;      // scale grid examined for an L quantifier
    Index chosen_M = 0;             // grid point backing the verdict, 0 if unused
    Index chosen_L = 0;
    double extremum = 0.0;          // deciding sup or partial sum
    Index witness_index = 0;        // row/column family member behind the verdict
    std::vector<CurvePoint> curve;  // deciding probe's growth curve
    std::string note;               // reading notes (estimated limits, fallbacks)
};

/// Evaluates one of the sixteen mapping conditions (ids "4.6".."4.21") over
/// the truncated tilde matrix. p governs the domain split K1 = {p_k <= 1},
/// K2 = {p_k > 1}; q is the target exponent sequence and must be positive
/// and non-decreasing over the horizon.
ConditionResult eval_condition(const std::string& id, const TildeMatrix& tilde,
                               const ExponentSeq& p, const ExponentSeq& q, Index N,
                               const Thresholds& th = {});

/// Condition ids required for a target space, keyed by
/// lq | c0q | cq | linfq.
const std::vector<std::string>& conditions_for_target(const std::string& target);

struct ClassificationResult {
    std::string target;
    Index N = 0;
    std::vector<ConditionResult> conditions;
    Verdict combined;
};

/// Runs every condition required for the target and AND-combines verdicts:
/// bounded only when all are bounded, growth as soon as one grows.
ClassificationResult classify(const MatrixSpec& A, const LambdaSeq& lambda, const ExponentSeq& p,
                              const ExponentSeq& q, const std::string& target, Index N,
                              const Thresholds& th = {});

}  // namespace seqspace

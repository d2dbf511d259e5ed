#pragma once

#include <string>
#include <vector>

#include "seqspace/specs.hpp"

namespace seqspace {

/// Desk-scale outcome for an inherently infinite statement. For
/// boundedness-style questions ConvergentNumeric reads "bounded evidence"
/// and DivergentNumeric reads "growth evidence".
enum class VerdictTag { ConvergentNumeric, DivergentNumeric, Inconclusive };

const char* verdict_name(VerdictTag t);

struct Verdict {
    VerdictTag tag = VerdictTag::Inconclusive;
    std::string rationale;
};

/// All numeric evidence thresholds, pinned in one place and echoed in reports.
struct Thresholds {
    double tail_tol = 1e-9;          // absolute tail bound for convergence
    double tail_rel_tol = 1e-4;      // tail bound relative to max(1, partial sum)
    double divergence_cap = 1e12;    // partial sums/sups beyond this are divergence
    double window_frac = 0.25;       // trailing window = last quarter of indices
    double flat_ratio = 1.25;        // window max/min at most this reads as flat
    double term_floor = 1e-8;        // flat window above this fails the term test
    double harmonic_floor = 1e-6;    // flat (n+1)*t_n window above this: harmonic bound
    double harmonic_slope = 1.02;    // fitted decay slope must stay near 1 for that rule
    double c0_drop = 0.01;           // trailing sup below this fraction: tending to zero
    double c0_stall = 0.5;           // trailing sup above this fraction: not tending to zero
    double sup_growth = 1.5;         // running sup ratio across the last decade
    double limit_dev_rel = 1e-6;     // column-limit stability tolerance
};

struct CurvePoint {
    Index N;
    double value;
};

/// Verdict on sum(terms), terms >= 0, evaluated at truncation N = terms.size()-1.
struct SeriesProbe {
    Verdict verdict;
    double partial_sum = 0.0;
    double last_term = 0.0;
    Index window_start = 0;
    double window_term_min = 0.0;
    double window_term_max = 0.0;
    double tail_estimate = 0.0;  // +inf when no majorant fits
    double growth_ratio = 0.0;   // P(N)/P(N/2), 0 when undefined
    std::vector<CurvePoint> curve;  // partial sums at decade checkpoints
};

SeriesProbe probe_series(const std::vector<double>& terms, const Thresholds& th);

/// Boundedness evidence for sup(values), values >= 0.
struct SupProbe {
    Verdict verdict;
    double sup = 0.0;
    Index arg = -1;
    double decade_ratio = 0.0;  // sup(N)/sup(N/10), 0 when undefined
    std::vector<CurvePoint> curve;  // running sup at decade checkpoints
};

SupProbe probe_sup(const std::vector<double>& values, const Thresholds& th);

/// Evidence that values -> 0: trailing sup versus the sup of the earlier part.
struct LimitZeroProbe {
    Verdict verdict;
    Index window_start = 0;
    double reference_sup = 0.0;
    double trailing_sup = 0.0;
    std::vector<CurvePoint> curve;  // running sup of the values themselves
};

LimitZeroProbe probe_limit_zero(const std::vector<double>& values, const Thresholds& th);

/// Trailing-window limit estimate with a stability flag.
struct LimitValueProbe {
    double estimate = 0.0;
    double max_deviation = 0.0;
    bool stable = false;
};

LimitValueProbe probe_limit_value(const std::vector<double>& values, const Thresholds& th);

/// Conjunction: any divergent wins, all convergent needed for convergent.
Verdict combine_all(const std::vector<Verdict>& parts);
/// Existential over a grid: any convergent wins, all divergent for divergent.
Verdict combine_any(const std::vector<Verdict>& parts);

/// Decade checkpoints N, N/10, N/100, ..., ascending, deduplicated.
std::vector<Index> decade_checkpoints(Index N);

}  // namespace seqspace

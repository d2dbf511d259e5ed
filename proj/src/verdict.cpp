#include "seqspace/verdict.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace seqspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

const char* verdict_name(VerdictTag t) {
    switch (t) {
        case VerdictTag::ConvergentNumeric: return "ConvergentNumeric";
        case VerdictTag::DivergentNumeric: return "DivergentNumeric";
        case VerdictTag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::vector<Index> decade_checkpoints(Index N) {
    std::vector<Index> pts;
    for (Index n = N; n > 0; n /= 10) pts.push_back(n);
    pts.push_back(0);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

SeriesProbe probe_series(const std::vector<double>& terms, const Thresholds& th) {
    SeriesProbe out;
    if (terms.empty()) {
        out.verdict = {VerdictTag::ConvergentNumeric, "empty sum"};
        return out;
    }
    const Index N = static_cast<Index>(terms.size()) - 1;

    std::vector<Index> cps = decade_checkpoints(N);
    std::size_t cp = 0;
    double P = 0.0;
    double P_half = 0.0;
    const Index half = N / 2;
    for (Index i = 0; i <= N; ++i) {
        double t = terms[static_cast<std::size_t>(i)];
        if (std::isnan(t)) {
            out.verdict = {VerdictTag::Inconclusive,
                           "term at index " + std::to_string(i) + " is NaN"};
            out.tail_estimate = kInf;
            return out;
        }
        P += std::fabs(t);
        if (i == half) P_half = P;
        while (cp < cps.size() && cps[cp] == i) {
            out.curve.push_back({i, P});
            ++cp;
        }
    }
    out.partial_sum = P;
    out.last_term = std::fabs(terms.back());
    out.growth_ratio = P_half > 0.0 ? P / P_half : 0.0;

    Index ws = static_cast<Index>(std::floor((N + 1) * (1.0 - th.window_frac)));
    if (ws < 0) ws = 0;
    if (ws > N) ws = N;
    out.window_start = ws;

    double wmin = kInf;
    double wmax = 0.0;
    double hmin = kInf;  // window min/max of (i+1)*t_i, the harmonic scaling
    double hmax = 0.0;
    for (Index i = ws; i <= N; ++i) {
        double t = std::fabs(terms[static_cast<std::size_t>(i)]);
        wmin = std::min(wmin, t);
        wmax = std::max(wmax, t);
        double h = (static_cast<double>(i) + 1.0) * t;
        hmin = std::min(hmin, h);
        hmax = std::max(hmax, h);
    }
    out.window_term_min = wmin;
    out.window_term_max = wmax;

    if (!(P < th.divergence_cap)) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "partial sum " + fmt(P) + " exceeds the divergence cap " + fmt(th.divergence_cap)};
        out.tail_estimate = kInf;
        return out;
    }

    // Decay-slope fit on block maxima: terms ~ C n^{-s} over the last decade.
    const Index w = std::max<Index>(1, (N + 1) / 100);
    auto block_max = [&](Index lo, Index hi) {
        lo = std::max<Index>(lo, 0);
        hi = std::min<Index>(hi, N);
        double m = 0.0;
        for (Index i = lo; i <= hi; ++i) m = std::max(m, std::fabs(terms[static_cast<std::size_t>(i)]));
        return m;
    };
    const Index d0 = N / 10;
    const Index mid = (d0 + N) / 2;
    const double b_end = block_max(N - w + 1, N);
    const Index nb = N - w / 2;
    const double a_start = block_max(d0, d0 + w - 1);
    const Index na = std::min<Index>(d0 + w / 2, N);
    const double a_mid = block_max(mid - w / 2, mid - w / 2 + w - 1);
    const Index nm = std::min<Index>(mid, N);
    double slope = std::numeric_limits<double>::quiet_NaN();
    if (b_end > 0.0) {
        if (a_start > 0.0 && nb > na) {
            double s = std::log(a_start / b_end) /
                       std::log(static_cast<double>(nb + 1) / static_cast<double>(na + 1));
            slope = s;
        }
        if (a_mid > 0.0 && nb > nm) {
            double s = std::log(a_mid / b_end) /
                       std::log(static_cast<double>(nb + 1) / static_cast<double>(nm + 1));
            slope = std::isnan(slope) ? s : std::min(slope, s);
        }
    }

    // Divergence by non-vanishing terms: the trailing window is flat (or the
    // fitted decay slope is nonpositive) while terms sit above the floor.
    const bool window_flat = wmin > 0.0 && wmax / wmin <= th.flat_ratio;
    const bool no_decay = !std::isnan(slope) && slope <= 0.05;
    if (N >= 20 && wmin >= th.term_floor && (window_flat || no_decay)) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "trailing terms stay at or above " + fmt(wmin) + ", not vanishing"};
        out.tail_estimate = kInf;
        return out;
    }

    const bool harmonic_flat = hmin > 0.0 && hmax / hmin <= th.flat_ratio;
    if (N >= 20 && harmonic_flat && hmin >= th.harmonic_floor && !std::isnan(slope) &&
        slope <= th.harmonic_slope) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "terms bounded below by " + fmt(hmin) + "/(n+1) over the trailing window"};
        out.tail_estimate = kInf;
        return out;
    }

    if (wmax == 0.0) {
        out.verdict = {VerdictTag::ConvergentNumeric,
                       "terms are zero over the trailing window; sum settled at " + fmt(P)};
        out.tail_estimate = 0.0;
        return out;
    }

    if (!std::isnan(slope) && slope > 1.0001) {
        double tail = b_end * static_cast<double>(nb + 1) / (slope - 1.0);
        out.tail_estimate = tail;
        double allowed = std::max(th.tail_tol, th.tail_rel_tol * std::max(1.0, P));
        if (tail <= allowed) {
            out.verdict = {VerdictTag::ConvergentNumeric,
                           "integral-test majorant bounds the tail by " + fmt(tail)};
        } else {
            out.verdict = {VerdictTag::Inconclusive,
                           "tail majorant " + fmt(tail) + " is above the tolerance " + fmt(allowed) +
                               " at this horizon"};
        }
        return out;
    }

    out.tail_estimate = kInf;
    out.verdict = {VerdictTag::Inconclusive, "no integrable majorant fits the trailing decay"};
    return out;
}

SupProbe probe_sup(const std::vector<double>& values, const Thresholds& th) {
    SupProbe out;
    if (values.empty()) {
        out.verdict = {VerdictTag::ConvergentNumeric, "no indices in range; sup is 0"};
        return out;
    }
    const Index N = static_cast<Index>(values.size()) - 1;
    std::vector<Index> cps = decade_checkpoints(N);
    std::size_t cp = 0;
    double run = 0.0;
    double decade_ago = 0.0;
    const Index d0 = N / 10;
    for (Index i = 0; i <= N; ++i) {
        double v = values[static_cast<std::size_t>(i)];
        if (std::isnan(v)) {
            out.verdict = {VerdictTag::Inconclusive,
                           "value at index " + std::to_string(i) + " is NaN"};
            return out;
        }
        v = std::fabs(v);
        if (v > run) {
            run = v;
            out.arg = i;
        }
        if (i == d0) decade_ago = run;
        while (cp < cps.size() && cps[cp] == i) {
            out.curve.push_back({i, run});
            ++cp;
        }
    }
    out.sup = run;
    out.decade_ratio = decade_ago > 0.0 ? run / decade_ago : 0.0;

    if (!(run < th.divergence_cap)) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "running sup " + fmt(run) + " exceeds the divergence cap"};
        return out;
    }
    if (N < 10) {
        if (run == 0.0)
            out.verdict = {VerdictTag::ConvergentNumeric, "all values are zero"};
        else
            out.verdict = {VerdictTag::Inconclusive, "horizon too short for a sup trend"};
        return out;
    }
    if (run <= decade_ago * (1.0 + 1e-12)) {
        out.verdict = {VerdictTag::ConvergentNumeric,
                       "no new sup record in the last decade; sup " + fmt(run)};
        return out;
    }
    if (decade_ago > 0.0 && run / decade_ago >= th.sup_growth) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "running sup grew " + fmt(run / decade_ago) + "x across the last decade"};
        return out;
    }
    out.verdict = {VerdictTag::Inconclusive, "new sup records without clear growth"};
    return out;
}

LimitZeroProbe probe_limit_zero(const std::vector<double>& values, const Thresholds& th) {
    LimitZeroProbe out;
    if (values.empty()) {
        out.verdict = {VerdictTag::ConvergentNumeric, "no values; trivially tending to zero"};
        return out;
    }
    const Index N = static_cast<Index>(values.size()) - 1;
    Index ws = static_cast<Index>(std::floor((N + 1) * (1.0 - th.window_frac)));
    if (ws < 0) ws = 0;
    if (ws > N) ws = N;
    out.window_start = ws;

    double ref = 0.0;
    double trail = 0.0;
    for (Index i = 0; i <= N; ++i) {
        double v = values[static_cast<std::size_t>(i)];
        if (std::isnan(v)) {
            out.verdict = {VerdictTag::Inconclusive,
                           "value at index " + std::to_string(i) + " is NaN"};
            return out;
        }
        v = std::fabs(v);
        if (i < ws)
            ref = std::max(ref, v);
        else
            trail = std::max(trail, v);
    }
    out.reference_sup = ref;
    out.trailing_sup = trail;

    for (Index n : decade_checkpoints(N)) {
        Index s = static_cast<Index>(std::floor((n + 1) * (1.0 - th.window_frac)));
        double m = 0.0;
        for (Index i = std::max<Index>(s, 0); i <= n; ++i)
            m = std::max(m, std::fabs(values[static_cast<std::size_t>(i)]));
        out.curve.push_back({n, m});
    }

    if (std::isinf(trail)) {
        out.verdict = {VerdictTag::DivergentNumeric, "trailing values overflow"};
        return out;
    }
    if (ref == 0.0 && trail == 0.0) {
        out.verdict = {VerdictTag::ConvergentNumeric, "values identically zero at this horizon"};
        return out;
    }
    if (ref == 0.0) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "values appear only near the horizon; no decay trend"};
        return out;
    }
    double ratio = trail / ref;
    if (ratio <= th.c0_drop) {
        out.verdict = {VerdictTag::ConvergentNumeric,
                       "trailing sup " + fmt(trail) + " fell below " + fmt(th.c0_drop) +
                           " of the earlier sup " + fmt(ref)};
    } else if (ratio >= th.c0_stall) {
        out.verdict = {VerdictTag::DivergentNumeric,
                       "trailing sup " + fmt(trail) + " stays at " + fmt(ratio) +
                           " of the earlier sup; no evidence of decay to zero"};
    } else {
        out.verdict = {VerdictTag::Inconclusive,
                       "trailing sup ratio " + fmt(ratio) + " between the decay and stall thresholds"};
    }
    return out;
}

LimitValueProbe probe_limit_value(const std::vector<double>& values, const Thresholds& th) {
    LimitValueProbe out;
    if (values.empty()) {
        out.stable = true;
        return out;
    }
    const Index N = static_cast<Index>(values.size()) - 1;
    Index ws = static_cast<Index>(std::floor((N + 1) * (1.0 - th.window_frac)));
    if (ws < 0) ws = 0;
    if (ws > N) ws = N;
    double sum = 0.0;
    Index count = 0;
    for (Index i = ws; i <= N; ++i) {
        double v = values[static_cast<std::size_t>(i)];
        if (std::isnan(v) || std::isinf(v)) {
            out.stable = false;
            out.max_deviation = kInf;
            return out;
        }
        sum += v;
        ++count;
    }
    out.estimate = sum / static_cast<double>(count);
    for (Index i = ws; i <= N; ++i)
        out.max_deviation =
            std::max(out.max_deviation, std::fabs(values[static_cast<std::size_t>(i)] - out.estimate));
    out.stable = out.max_deviation <= th.limit_dev_rel * std::max(1.0, std::fabs(out.estimate));
    return out;
}

Verdict combine_all(const std::vector<Verdict>& parts) {
    if (parts.empty()) return {VerdictTag::ConvergentNumeric, "no parts to combine"};
    bool all_conv = true;
    for (const Verdict& v : parts) {
        if (v.tag == VerdictTag::DivergentNumeric)
            return {VerdictTag::DivergentNumeric, v.rationale};
        if (v.tag != VerdictTag::ConvergentNumeric) all_conv = false;
    }
    if (all_conv) return {VerdictTag::ConvergentNumeric, "all parts convergent/bounded"};
    for (const Verdict& v : parts)
        if (v.tag == VerdictTag::Inconclusive) return {VerdictTag::Inconclusive, v.rationale};
    return {VerdictTag::Inconclusive, "mixed evidence"};
}

Verdict combine_any(const std::vector<Verdict>& parts) {
    if (parts.empty()) return {VerdictTag::Inconclusive, "empty grid"};
    bool all_div = true;
    for (const Verdict& v : parts) {
        if (v.tag == VerdictTag::ConvergentNumeric)
            return {VerdictTag::ConvergentNumeric, v.rationale};
        if (v.tag != VerdictTag::DivergentNumeric) all_div = false;
    }
    if (all_div)
        return {VerdictTag::DivergentNumeric,
                "every grid point shows growth; " + parts.back().rationale};
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
        if (it->tag == VerdictTag::Inconclusive) return {VerdictTag::Inconclusive, it->rationale};
    return {VerdictTag::Inconclusive, "mixed grid evidence"};
}

}  // namespace seqspace

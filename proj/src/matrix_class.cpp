#include "seqspace/matrix_class.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "seqspace/utils.hpp"

namespace seqspace {

double subset_sup(const std::vector<double>& v) {
    double pos = 0.0;
    double neg = 0.0;
    for (double x : v) (x >= 0.0 ? pos : neg) += x;
    return std::max(pos, -neg);
}

Rational subset_sup_exact(const std::vector<Rational>& v) {
    std::vector<Rational> pos;
    std::vector<Rational> neg;
    for (const Rational& x : v) (x.sign() >= 0 ? pos : neg).push_back(x);
    Rational p = sum_pairwise(pos);
    Rational n = -sum_pairwise(neg);
    return p >= n ? p : n;
}

double brute_force_subset_sup(const std::vector<double>& v) {
    if (v.size() > 20)
        throw ValidationError(ValidationError::Code::BruteForceTooLarge,
                              "subset enumeration is capped at 20 entries",
                              static_cast<std::int64_t>(v.size()));
    double best = 0.0;
    const std::size_t m = v.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i)) s += v[i];
        best = std::max(best, std::fabs(s));
    }
    return best;
}

// ------------------------------------------------------------- TildeMatrix

double TildeMatrix::at(Index n, Index k) const {
    if (n < 0 || k < 0 || n > N_ || k > N_)
        throw ValidationError(ValidationError::Code::InvalidHorizon,
                              "entry outside the built truncation", n);
    return t_[idx(n, k)];
}

double TildeMatrix::scaled_at(Index n, Index k) const {
    if (n < 0 || k < 0 || n > N_ || k > N_)
        throw ValidationError(ValidationError::Code::InvalidHorizon,
                              "entry outside the built truncation", n);
    return scaled_[idx(n, k)];
}

const Rational& TildeMatrix::at_exact(Index n, Index k) const {
    if (!exact_)
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              "exact entries were not built: " + precision_note_);
    if (n < 0 || k < 0 || n > N_ || k > N_)
        throw ValidationError(ValidationError::Code::InvalidHorizon,
                              "entry outside the built truncation", n);
    return t_exact_[idx(n, k)];
}

const Rational& TildeMatrix::scaled_at_exact(Index n, Index k) const {
    if (!exact_)
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              "exact entries were not built: " + precision_note_);
    if (n < 0 || k < 0 || n > N_ || k > N_)
        throw ValidationError(ValidationError::Code::InvalidHorizon,
                              "entry outside the built truncation", n);
    return scaled_exact_[idx(n, k)];
}

ColumnLimit TildeMatrix::column_limit(Index k, const Thresholds& th) const {
    std::vector<double> col(static_cast<std::size_t>(N_) + 1);
    for (Index n = 0; n <= N_; ++n) col[static_cast<std::size_t>(n)] = t_[idx(n, k)];
    LimitValueProbe pr = probe_limit_value(col, th);
    return {pr.estimate, pr.max_deviation, pr.stable};
}

TildeMatrix build_tilde(const MatrixSpec& A, const LambdaSeq& lambda, Index N, Mode mode) {
    if (N < 0)
        throw ValidationError(ValidationError::Code::InvalidHorizon, "horizon must be >= 0");
    lambda.require_valid(N + 1);
    TildeMatrix out;
    out.N_ = N;
    const std::size_t W = static_cast<std::size_t>(N) + 1;
    out.t_.resize(W * W);
    out.scaled_.resize(W * W);

    std::vector<double> pl = lambda.padded_values<double>(N + 1);  // l_{-1} .. l_{N+1}
    parallel_for(N + 1, [&](Index n) {
        std::vector<double> row = A.row_f64(n, N + 1);
        for (Index k = 0; k <= N; ++k) {
            auto ik = static_cast<std::size_t>(k);
            double dk = pl[ik + 1] - pl[ik];
            double dk1 = pl[ik + 2] - pl[ik + 1];
            out.t_[out.idx(n, k)] = (row[ik] / dk - row[ik + 1] / dk1) * pl[ik + 1];
            out.scaled_[out.idx(n, k)] = row[ik] * pl[ik + 1] / dk;
        }
    });

    if (mode == Mode::Exact) {
        std::string why;
        if (A.certainly_not_exact(&why) || lambda.spec().certainly_not_exact(&why)) {
            out.precision_note_ = "exact entries unavailable: " + why;
        } else {
            try {
                std::vector<Rational> plx = lambda.padded_values<Rational>(N + 1);
                out.t_exact_.resize(W * W);
                out.scaled_exact_.resize(W * W);
                for (Index n = 0; n <= N; ++n) {
                    std::vector<Rational> row = A.row_exact(n, N + 1);
                    for (Index k = 0; k <= N; ++k) {
                        auto ik = static_cast<std::size_t>(k);
                        Rational dk = plx[ik + 1] - plx[ik];
                        Rational dk1 = plx[ik + 2] - plx[ik + 1];
                        out.t_exact_[out.idx(n, k)] = (row[ik] / dk - row[ik + 1] / dk1) * plx[ik + 1];
                        out.scaled_exact_[out.idx(n, k)] = row[ik] * plx[ik + 1] / dk;
                    }
                }
                out.exact_ = true;
            } catch (const EvalError& e) {
                out.t_exact_.clear();
                out.scaled_exact_.clear();
                out.precision_note_ = std::string("exact entries unavailable: ") + e.what();
            }
        }
    }
    return out;
}

// ------------------------------------------------------- condition catalog

namespace {

const std::vector<Index>& scale_grid() {
    static const std::vector<Index> g = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
    return g;
}

struct Ctx {
    const TildeMatrix& T;
    Index N;
    std::vector<double> pv;
    std::vector<double> qv;
    std::vector<double> conj;        // p_k/(p_k - 1) on K2 slots, 0 elsewhere
    std::vector<unsigned char> k1;   // p_k <= 1
    const Thresholds& th;
};

/// One probe outcome plus the data that backs it in the report.
struct Decided {
    Verdict v;
    double ext = 0.0;
    Index witness = 0;
    std::vector<CurvePoint> curve;
};

Decided from_sup(const SupProbe& pr) { return {pr.verdict, pr.sup, pr.arg, pr.curve}; }
Decided from_series(const SeriesProbe& pr) {
    return {pr.verdict, pr.partial_sum, pr.window_start, pr.curve};
}
Decided from_limit_zero(const LimitZeroProbe& pr) {
    return {pr.verdict, pr.trailing_sup, pr.window_start, pr.curve};
}

/// AND over family members, keeping the deciding member's payload: the first
/// growth, else the first inconclusive, else the member with the largest sup.
class AllPick {
public:
    void add(Index member, const Decided& d) {
        vs_.push_back(d.v);
        bool take = false;
        if (d.v.tag == VerdictTag::DivergentNumeric) {
            if (!have_div_) take = have_div_ = true;
        } else if (d.v.tag == VerdictTag::Inconclusive) {
            if (!have_div_ && !have_inc_) take = have_inc_ = true;
        } else if (!have_div_ && !have_inc_ && (!have_any_ || d.ext >= best_.ext)) {
            take = true;
        }
        if (take) {
            best_ = d;
            member_ = member;
        }
        have_any_ = true;
    }
    Verdict combined() const { return combine_all(vs_); }
    const Decided& decided() const { return best_; }
    Index member() const { return member_; }

private:
    std::vector<Verdict> vs_;
    Decided best_;
    Index member_ = 0;
    bool have_div_ = false;
    bool have_inc_ = false;
    bool have_any_ = false;
};

/// Existential over a scale grid: first bounded point wins; otherwise report
/// the last point consistent with the combined verdict.
class AnyPick {
public:
    void add(Index member, Decided d) { all_.emplace_back(member, std::move(d)); }
    Verdict combined() const {
        std::vector<Verdict> vs;
        vs.reserve(all_.size());
        for (const auto& e : all_) vs.push_back(e.second.v);
        return combine_any(vs);
    }
    std::pair<Index, Decided> pick() const {
        for (const auto& e : all_)
            if (e.second.v.tag == VerdictTag::ConvergentNumeric) return e;
        if (combined().tag == VerdictTag::Inconclusive)
            for (auto it = all_.rbegin(); it != all_.rend(); ++it)
                if (it->second.v.tag == VerdictTag::Inconclusive) return *it;
        return all_.back();
    }

private:
    std::vector<std::pair<Index, Decided>> all_;
};

void apply(ConditionResult& r, const Verdict& v, const Decided& d) {
    r.verdict = v;
    r.extremum = d.ext;
    r.witness_index = d.witness;
    r.curve = d.curve;
}

/// Largest |subset sum| of every column over rows 0..N, by sign-split.
std::vector<double> column_subset_sups(const Ctx& c) {
    std::vector<double> out(static_cast<std::size_t>(c.N) + 1);
    parallel_for(c.N + 1, [&](Index k) {
        double pos = 0.0;
        double neg = 0.0;
        for (Index n = 0; n <= c.N; ++n) {
            double x = c.T.at(n, k);
            (x >= 0.0 ? pos : neg) += x;
        }
        out[static_cast<std::size_t>(k)] = std::max(pos, -neg);
    });
    return out;
}

/// Row factor L^{sign/q_n} for every row.
std::vector<double> row_factors(const Ctx& c, Index L, int sign) {
    std::vector<double> f(static_cast<std::size_t>(c.N) + 1);
    for (Index n = 0; n <= c.N; ++n)
        f[static_cast<std::size_t>(n)] =
            std::pow(static_cast<double>(L), static_cast<double>(sign) / c.qv[static_cast<std::size_t>(n)]);
    return f;
}

/// s_n = max over K1 columns of (|t_nk - shift_k| * fac_n)^{p_k}.
std::vector<double> k1_row_sups(const Ctx& c, const std::vector<double>& fac,
                                const std::vector<double>* shift) {
    std::vector<double> s(static_cast<std::size_t>(c.N) + 1, 0.0);
    parallel_for(c.N + 1, [&](Index n) {
        double best = 0.0;
        for (Index k = 0; k <= c.N; ++k) {
            auto ik = static_cast<std::size_t>(k);
            if (!c.k1[ik]) continue;
            double v = c.T.at(n, k);
            if (shift) v -= (*shift)[ik];
            v = std::fabs(v) * fac[static_cast<std::size_t>(n)];
            if (v == 0.0) continue;
            best = std::max(best, std::pow(v, c.pv[ik]));
        }
        s[static_cast<std::size_t>(n)] = best;
    });
    return s;
}

/// Nonzero K2 entries per row, |t_nk - shift_k| keyed by column.
std::vector<std::vector<std::pair<Index, double>>> k2_rows(const Ctx& c,
                                                           const std::vector<double>* shift) {
    std::vector<std::vector<std::pair<Index, double>>> nz(static_cast<std::size_t>(c.N) + 1);
    parallel_for(c.N + 1, [&](Index n) {
        auto& row = nz[static_cast<std::size_t>(n)];
        for (Index k = 0; k <= c.N; ++k) {
            auto ik = static_cast<std::size_t>(k);
            if (c.k1[ik]) continue;
            double v = c.T.at(n, k);
            if (shift) v -= (*shift)[ik];
            if (v != 0.0) row.emplace_back(k, std::fabs(v));
        }
    });
    return nz;
}

/// Two-layer probe of sup_n sum_{k in K2} (|entry| * fac_n * Minv)^{conj_k}:
/// a sup probe across the row sums plus series probes of the rows at decade
/// checkpoints, so a row whose own sum diverges in k is not missed.
Decided k2_sum_probe(const Ctx& c, const std::vector<std::vector<std::pair<Index, double>>>& nz,
                     const std::vector<double>* shift, const std::vector<double>& fac,
                     double Minv) {
    std::vector<double> sums(static_cast<std::size_t>(c.N) + 1, 0.0);
    parallel_for(c.N + 1, [&](Index n) {
        auto in = static_cast<std::size_t>(n);
        double s = 0.0;
        for (const auto& [k, av] : nz[in])
            s += std::pow(av * fac[in] * Minv, c.conj[static_cast<std::size_t>(k)]);
        sums[in] = s;
    });
    SupProbe sup = probe_sup(sums, c.th);

    AllPick pick;
    pick.add(sup.arg, from_sup(sup));
    for (Index n : decade_checkpoints(c.N)) {
        std::vector<double> terms;
        terms.reserve(static_cast<std::size_t>(c.N) + 1);
        for (Index k = 0; k <= c.N; ++k) {
            auto ik = static_cast<std::size_t>(k);
            if (c.k1[ik]) continue;
            double v = c.T.at(n, k);
            if (shift) v -= (*shift)[ik];
            terms.push_back(std::pow(std::fabs(v) * fac[static_cast<std::size_t>(n)] * Minv,
                                     c.conj[ik]));
        }
        pick.add(n, from_series(probe_series(terms, c.th)));
    }
    Decided d = pick.decided();
    d.v = pick.combined();
    if (d.v.tag == VerdictTag::ConvergentNumeric) {
        d.ext = sup.sup;
        d.witness = sup.arg;
        d.curve = sup.curve;
    } else {
        d.witness = pick.member();
    }
    return d;
}

/// Column limits for the columns selected by `need`; returns false and the
/// offending column when any of them is not yet stable at this horizon.
bool stable_column_limits(const Ctx& c, const std::vector<unsigned char>& need,
                          std::vector<double>& lim, Index* bad, double* bad_dev) {
    lim.assign(static_cast<std::size_t>(c.N) + 1, 0.0);
    for (Index k = 0; k <= c.N; ++k) {
        auto ik = static_cast<std::size_t>(k);
        if (!need[ik]) continue;
        ColumnLimit cl = c.T.column_limit(k, c.th);
        if (!cl.stable) {
            *bad = k;
            *bad_dev = cl.max_deviation;
            return false;
        }
        lim[ik] = cl.value;
    }
    return true;
}

// --- the sixteen conditions -----------------------------------------------

// 4.6: sup over K1 columns of (subset sup of column k)^{p_k}.
ConditionResult cond_4_6(const Ctx& c) {
    ConditionResult r;
    std::vector<double> cs = column_subset_sups(c);
    std::vector<double> vals;
    std::vector<Index> ks;
    for (Index k = 0; k <= c.N; ++k) {
        auto ik = static_cast<std::size_t>(k);
        if (!c.k1[ik]) continue;
        vals.push_back(std::pow(cs[ik], c.pv[ik]));
        ks.push_back(k);
    }
    SupProbe pr = probe_sup(vals, c.th);
    apply(r, pr.verdict, from_sup(pr));
    if (!ks.empty()) r.witness_index = ks[static_cast<std::size_t>(pr.arg)];
    r.note = "subset sup per column by sign-split; exponent p_k on the p<=1 columns";
    return r;
}

// 4.7: exists M with sum over K2 columns of (subset sup of column k / M)^{conj_k} finite.
ConditionResult cond_4_7(const Ctx& c) {
    ConditionResult r;
    std::vector<double> cs = column_subset_sups(c);
    std::vector<double> base;
    std::vector<double> ce;
    for (Index k = 0; k <= c.N; ++k) {
        auto ik = static_cast<std::size_t>(k);
        if (c.k1[ik]) continue;
        base.push_back(cs[ik]);
        ce.push_back(c.conj[ik]);
    }
    r.grid_M = scale_grid();
    AnyPick pick;
    for (Index M : scale_grid()) {
        std::vector<double> terms(base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            terms[i] = std::pow(base[i] / static_cast<double>(M), ce[i]);
        pick.add(M, from_series(probe_series(terms, c.th)));
    }
    auto [M, d] = pick.pick();
    apply(r, pick.combined(), d);
    r.chosen_M = M;
    r.note = "per-column sign-split bounds the shared row-subset sup from above";
    return r;
}

// 4.8: exists M with sup over columns of sum_n (|t_nk| M^{-1/p_k})^{q_n} finite.
ConditionResult cond_4_8(const Ctx& c) {
    ConditionResult r;
    const Index K = c.N / 2;
    r.grid_M = scale_grid();
    AnyPick pick;
    for (Index M : scale_grid()) {
        std::vector<double> colsum(static_cast<std::size_t>(K) + 1, 0.0);
        parallel_for(K + 1, [&](Index k) {
            auto ik = static_cast<std::size_t>(k);
            double mf = std::pow(static_cast<double>(M), -1.0 / c.pv[ik]);
            double s = 0.0;
            for (Index n = 0; n <= c.N; ++n) {
                double v = std::fabs(c.T.at(n, k));
                if (v != 0.0) s += std::pow(v * mf, c.qv[static_cast<std::size_t>(n)]);
            }
            colsum[ik] = s;
        });
        SupProbe sup = probe_sup(colsum, c.th);
        AllPick layers;
        layers.add(sup.arg, from_sup(sup));
        for (Index k : decade_checkpoints(K)) {
            auto ik = static_cast<std::size_t>(k);
            double mf = std::pow(static_cast<double>(M), -1.0 / c.pv[ik]);
            std::vector<double> terms(static_cast<std::size_t>(c.N) + 1);
            for (Index n = 0; n <= c.N; ++n)
                terms[static_cast<std::size_t>(n)] =
                    std::pow(std::fabs(c.T.at(n, k)) * mf, c.qv[static_cast<std::size_t>(n)]);
            layers.add(k, from_series(probe_series(terms, c.th)));
        }
        Decided d = layers.decided();
        Verdict combined = layers.combined();
        if (combined.tag == VerdictTag::ConvergentNumeric) d = from_sup(sup);
        d.v = combined;
        pick.add(M, d);
    }
    auto [M, d] = pick.pick();
    apply(r, pick.combined(), d);
    r.chosen_M = M;
    r.note = "columns sampled on [0, N/2]; inner sum over rows powered q_n";
    return r;
}

// 4.9: every column of |t_nk|^{q_n} tends to zero down the rows.
ConditionResult cond_4_9(const Ctx& c) {
    ConditionResult r;
    AllPick pick;
    for (Index k = 0; k <= c.N / 2; ++k) {
        std::vector<double> vals(static_cast<std::size_t>(c.N) + 1);
        for (Index n = 0; n <= c.N; ++n)
            vals[static_cast<std::size_t>(n)] =
                std::pow(std::fabs(c.T.at(n, k)), c.qv[static_cast<std::size_t>(n)]);
        pick.add(k, from_limit_zero(probe_limit_zero(vals, c.th)));
    }
    apply(r, pick.combined(), pick.decided());
    r.witness_index = pick.member();
    r.note = "columns sampled on [0, N/2]";
    return r;
}

// Shared body for the K1 sup conditions with an L quantifier.
ConditionResult k1_sup_with_L(const Ctx& c, int sign, bool forall,
                              const std::vector<double>* shift, std::string note) {
    ConditionResult r;
    r.grid_L = scale_grid();
    AllPick all;
    AnyPick any;
    for (Index L : scale_grid()) {
        std::vector<double> fac = row_factors(c, L, sign);
        SupProbe pr = probe_sup(k1_row_sups(c, fac, shift), c.th);
        if (forall)
            all.add(L, from_sup(pr));
        else
            any.add(L, from_sup(pr));
    }
    if (forall) {
        apply(r, all.combined(), all.decided());
        r.chosen_L = all.member();
        r.witness_index = all.decided().witness;
    } else {
        auto [L, d] = any.pick();
        apply(r, any.combined(), d);
        r.chosen_L = L;
    }
    r.note = std::move(note);
    return r;
}

// Shared body for the K2 sum conditions: optional L factor, optional
// exists-M scale, two-layer row probes.
ConditionResult k2_sum_with_grids(const Ctx& c, int lsign, bool forall_L, bool with_M,
                                  const std::vector<double>* shift, std::string note) {
    ConditionResult r;
    auto nz = k2_rows(c, shift);
    std::vector<double> ones(static_cast<std::size_t>(c.N) + 1, 1.0);

    auto over_M = [&](const std::vector<double>& fac, Index* chosen, Decided* out) {
        if (!with_M) {
            *out = k2_sum_probe(c, nz, shift, fac, 1.0);
            *chosen = 0;
            return out->v;
        }
        AnyPick pick;
        for (Index M : scale_grid())
            pick.add(M, k2_sum_probe(c, nz, shift, fac, 1.0 / static_cast<double>(M)));
        auto [M, d] = pick.pick();
        *chosen = M;
        *out = d;
        Verdict v = pick.combined();
        out->v = v;
        return v;
    };

    if (with_M) r.grid_M = scale_grid();
    if (lsign == 0) {
        Decided d;
        apply(r, over_M(ones, &r.chosen_M, &d), d);
    } else {
        r.grid_L = scale_grid();
        AllPick all;
        AnyPick any;
        std::vector<Index> chosen_m(scale_grid().size(), 0);
        std::size_t i = 0;
        for (Index L : scale_grid()) {
            std::vector<double> fac = row_factors(c, L, lsign);
            Decided d;
            Verdict v = over_M(fac, &chosen_m[i], &d);
            d.v = v;
            if (forall_L)
                all.add(L, d);
            else
                any.add(L, d);
            ++i;
        }
        if (forall_L) {
            apply(r, all.combined(), all.decided());
            r.chosen_L = all.member();
            const auto& g = scale_grid();
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[j] == r.chosen_L) r.chosen_M = chosen_m[j];
        } else {
            auto [L, d] = any.pick();
            apply(r, any.combined(), d);
            r.chosen_L = L;
            const auto& g = scale_grid();
            for (std::size_t j = 0; j < g.size(); ++j)
                if (g[j] == r.chosen_L) r.chosen_M = chosen_m[j];
        }
    }
    r.note = std::move(note);
    return r;
}

// 4.15: every column of |t_nk - limit_k|^{q_n} tends to zero down the rows.
ConditionResult cond_4_15(const Ctx& c, const std::vector<double>& lim) {
    ConditionResult r;
    AllPick pick;
    for (Index k = 0; k <= c.N / 2; ++k) {
        auto ik = static_cast<std::size_t>(k);
        std::vector<double> vals(static_cast<std::size_t>(c.N) + 1);
        for (Index n = 0; n <= c.N; ++n)
            vals[static_cast<std::size_t>(n)] =
                std::pow(std::fabs(c.T.at(n, k) - lim[ik]), c.qv[static_cast<std::size_t>(n)]);
        pick.add(k, from_limit_zero(probe_limit_zero(vals, c.th)));
    }
    apply(r, pick.combined(), pick.decided());
    r.witness_index = pick.member();
    r.note = "column limits taken from the trailing-row mean; columns sampled on [0, N/2]";
    return r;
}

// Row-membership conditions on the scaled original entries g_k a_nk.
enum class RowSpace { TendsToZero, Converges, Bounded };

ConditionResult row_membership(const Ctx& c, RowSpace space, std::string note) {
    ConditionResult r;
    AllPick pick;
    for (Index n = 0; n <= c.N / 2; ++n) {
        std::vector<double> raw(static_cast<std::size_t>(c.N) + 1);
        for (Index k = 0; k <= c.N; ++k)
            raw[static_cast<std::size_t>(k)] = c.T.scaled_at(n, k);
        double shift = 0.0;
        if (space == RowSpace::Converges) {
            LimitValueProbe lv = probe_limit_value(raw, c.th);
            if (!lv.stable) {
                pick.add(n, {{VerdictTag::Inconclusive,
                              "row limit not settled at this horizon (deviation " +
                                  std::to_string(lv.max_deviation) + ")"},
                             lv.max_deviation,
                             n,
                             {}});
                continue;
            }
            shift = lv.estimate;
        }
        std::vector<double> vals(raw.size());
        for (Index k = 0; k <= c.N; ++k) {
            auto ik = static_cast<std::size_t>(k);
            vals[ik] = std::pow(std::fabs(raw[ik] - shift), c.qv[ik]);
        }
        if (space == RowSpace::Bounded) {
            SupProbe pr = probe_sup(vals, c.th);
            pick.add(n, from_sup(pr));
        } else {
            pick.add(n, from_limit_zero(probe_limit_zero(vals, c.th)));
        }
    }
    apply(r, pick.combined(), pick.decided());
    r.witness_index = pick.member();
    r.note = std::move(note);
    return r;
}

}  // namespace

const std::vector<std::string>& conditions_for_target(const std::string& target) {
    static const std::vector<std::string> lq = {"4.6", "4.7", "4.8", "4.19"};
    static const std::vector<std::string> c0q = {"4.9", "4.10", "4.11", "4.19"};
    static const std::vector<std::string> cq = {"4.12", "4.13", "4.14", "4.15", "4.16", "4.20"};
    static const std::vector<std::string> linfq = {"4.17", "4.18", "4.21"};
    if (target == "lq") return lq;
    if (target == "c0q") return c0q;
    if (target == "cq") return cq;
    if (target == "linfq") return linfq;
    throw ValidationError(ValidationError::Code::InvalidSpec,
                          "unknown target space '" + target + "' (use lq, c0q, cq or linfq)");
}

ConditionResult eval_condition(const std::string& id, const TildeMatrix& tilde,
                               const ExponentSeq& p, const ExponentSeq& q, Index N,
                               const Thresholds& th) {
    if (N < 0 || N > tilde.N())
        throw ValidationError(ValidationError::Code::InvalidHorizon,
                              "condition horizon exceeds the built truncation", N);
    p.require_valid(N);
    q.require_valid(N);

    Ctx c{tilde, N, p.spec().values_f64(N), q.spec().values_f64(N), {}, {}, th};
    for (Index n = 0; n < N; ++n) {
        auto i = static_cast<std::size_t>(n);
        if (c.qv[i + 1] + 1e-12 * std::max(1.0, std::fabs(c.qv[i])) < c.qv[i])
            throw ValidationError(ValidationError::Code::NotNondecreasing,
                                  "target exponents must be non-decreasing", n + 1);
    }
    c.k1.resize(c.pv.size());
    c.conj.assign(c.pv.size(), 0.0);
    for (std::size_t i = 0; i < c.pv.size(); ++i) {
        c.k1[i] = c.pv[i] <= 1.0;
        if (!c.k1[i]) c.conj[i] = c.pv[i] / (c.pv[i] - 1.0);
    }

    ConditionResult r;
    if (id == "4.6") {
        r = cond_4_6(c);
    } else if (id == "4.7") {
        r = cond_4_7(c);
    } else if (id == "4.8") {
        r = cond_4_8(c);
    } else if (id == "4.9") {
        r = cond_4_9(c);
    } else if (id == "4.10") {
        r = k1_sup_with_L(c, +1, /*forall=*/true, nullptr,
                          "for all L: sup_n of K1 row sups with factor L^{1/q_n}");
    } else if (id == "4.11") {
        r = k2_sum_with_grids(c, +1, /*forall_L=*/true, /*with_M=*/true, nullptr,
                              "for all L, exists M: K2 row sums with factor L^{1/q_n} M^{-1}");
    } else if (id == "4.12") {
        std::vector<double> ones(static_cast<std::size_t>(N) + 1, 1.0);
        SupProbe pr = probe_sup(k1_row_sups(c, ones, nullptr), th);
        apply(r, pr.verdict, from_sup(pr));
        r.note = "sup_n of K1 row sups of |t_nk|^{p_k}";
    } else if (id == "4.13") {
        r = k2_sum_with_grids(c, 0, false, /*with_M=*/true, nullptr,
                              "exists M: K2 row sums of (|t_nk| M^{-1})^{conj}");
    } else if (id == "4.14" || id == "4.15" || id == "4.16") {
        std::vector<unsigned char> need(c.pv.size(), 0);
        for (Index k = 0; k <= N; ++k) {
            auto ik = static_cast<std::size_t>(k);
            if (id == "4.14")
                need[ik] = c.k1[ik];
            else if (id == "4.16")
                need[ik] = !c.k1[ik];
            else
                need[ik] = k <= N / 2;
        }
        std::vector<double> lim;
        Index bad = 0;
        double bad_dev = 0.0;
        if (!stable_column_limits(c, need, lim, &bad, &bad_dev)) {
            r.verdict = {VerdictTag::Inconclusive,
                         "column limit at k=" + std::to_string(bad) +
                             " not settled (deviation " + std::to_string(bad_dev) + ")"};
            r.witness_index = bad;
            r.note = "column limits taken from the trailing-row mean";
        } else if (id == "4.14") {
            r = k1_sup_with_L(c, +1, true, &lim,
                              "for all L: sup_n of K1 row sups of deviations from column limits");
        } else if (id == "4.16") {
            r = k2_sum_with_grids(c, +1, true, true, &lim,
                                  "for all L, exists M: K2 row sums of deviations from column limits");
        } else {
            r = cond_4_15(c, lim);
        }
    } else if (id == "4.17") {
        r = k1_sup_with_L(c, -1, /*forall=*/false, nullptr,
                          "exists L: sup_n of K1 row sups with factor L^{-1/q_n}");
    } else if (id == "4.18") {
        r = k2_sum_with_grids(c, -1, /*forall_L=*/false, /*with_M=*/false, nullptr,
                              "exists L: K2 row sums with factor L^{-1/q_n}");
    } else if (id == "4.19") {
        r = row_membership(c, RowSpace::TendsToZero,
                           "rows of g_k a_nk tend to zero in the q-powered sense; rows sampled on [0, N/2]");
    } else if (id == "4.20") {
        r = row_membership(c, RowSpace::Converges,
                           "rows of g_k a_nk settle to a limit; rows sampled on [0, N/2]");
    } else if (id == "4.21") {
        r = row_membership(c, RowSpace::Bounded,
                           "rows of g_k a_nk stay bounded in the q-powered sense; rows sampled on [0, N/2]");
    } else {
        throw ValidationError(ValidationError::Code::UnsupportedCondition,
                              "unknown condition id '" + id + "' (use 4.6 .. 4.21)");
    }
    r.id = id;
    r.N = N;
    return r;
}

ClassificationResult classify(const MatrixSpec& A, const LambdaSeq& lambda, const ExponentSeq& p,
                              const ExponentSeq& q, const std::string& target, Index N,
                              const Thresholds& th) {
    const std::vector<std::string>& ids = conditions_for_target(target);
    TildeMatrix tilde = build_tilde(A, lambda, N, Mode::Float64);
    ClassificationResult out;
    out.target = target;
    out.N = N;
    std::vector<Verdict> vs;
    for (const std::string& id : ids) {
        out.conditions.push_back(eval_condition(id, tilde, p, q, N, th));
        vs.push_back(out.conditions.back().verdict);
    }
    out.combined = combine_all(vs);
    return out;
}

}  // namespace seqspace

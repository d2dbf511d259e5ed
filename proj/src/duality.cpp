#include "seqspace/duality.hpp"

#include <cmath>

namespace seqspace {

template <class T>
T DualMatrixD::entry(Index n, Index k) const {
    if (k > n || k < n - 1 || k < 0) return T(0);
    const SeqSpec& ls = lambda_->spec();
    T ln = spec_value<T>(ls, n);
    T lprev = n == 0 ? T(0) : spec_value<T>(ls, n - 1);
    T an = spec_value<T>(*a_, n);
    if (k == n) return ln * an / (ln - lprev);
    return -(lprev * an) / (ln - lprev);
}

template double DualMatrixD::entry<double>(Index, Index) const;
template Rational DualMatrixD::entry<Rational>(Index, Index) const;

template <class T>
std::pair<T, T> DualMatrixD::column(Index k) const {
    return {entry<T>(k, k), entry<T>(k + 1, k)};
}

template std::pair<double, double> DualMatrixD::column<double>(Index) const;
template std::pair<Rational, Rational> DualMatrixD::column<Rational>(Index) const;

template <class T>
T DualMatrixB::s1(Index k) const {
    const SeqSpec& ls = lambda_->spec();
    T lk = spec_value<T>(ls, k);
    T lprev = k == 0 ? T(0) : spec_value<T>(ls, k - 1);
    T lnext = spec_value<T>(ls, k + 1);
    T u_here = spec_value<T>(*a_, k) / (lk - lprev);
    T u_next = spec_value<T>(*a_, k + 1) / (lnext - lk);
    return (u_here - u_next) * lk;
}

template <class T>
T DualMatrixB::s2(Index k) const {
    const SeqSpec& ls = lambda_->spec();
    T lk = spec_value<T>(ls, k);
    T lprev = k == 0 ? T(0) : spec_value<T>(ls, k - 1);
    return spec_value<T>(*a_, k) * lk / (lk - lprev);
}

template <class T>
T DualMatrixB::entry(Index n, Index k) const {
    if (k < 0 || k > n) return T(0);
    return k == n ? s2<T>(k) : s1<T>(k);
}

template double DualMatrixB::s1<double>(Index) const;
template Rational DualMatrixB::s1<Rational>(Index) const;
template double DualMatrixB::s2<double>(Index) const;
template Rational DualMatrixB::s2<Rational>(Index) const;
template double DualMatrixB::entry<double>(Index, Index) const;
template Rational DualMatrixB::entry<Rational>(Index, Index) const;

DualMatrixD build_D(std::shared_ptr<const SeqSpec> a, std::shared_ptr<const LambdaSeq> lambda) {
    return DualMatrixD(std::move(a), std::move(lambda));
}

DualMatrixB build_B(std::shared_ptr<const SeqSpec> a, std::shared_ptr<const LambdaSeq> lambda) {
    return DualMatrixB(std::move(a), std::move(lambda));
}

namespace {

const std::vector<Index> kMGrid = {2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};

/// Sup-form part over K1: values are |base_k|^{p_k} for k in K1.
DualPartReport part_k1_sup(const std::vector<double>& base, const std::vector<bool>& in_k1,
                           const std::vector<double>& pv, const Thresholds& th) {
    DualPartReport part;
    part.name = "k1";
    std::vector<double> vals;
    for (std::size_t k = 0; k < base.size(); ++k)
        if (in_k1[k]) vals.push_back(std::pow(std::fabs(base[k]), pv[k]));
    part.indices = static_cast<Index>(vals.size());
    SupProbe probe = probe_sup(vals, th);
    part.verdict = probe.verdict;
    part.sup = probe.sup;
    part.curve = probe.curve;
    return part;
}

/// Conjugate-sum part over K2 with the M-grid existential. When `with_sup`
/// is set, each grid point also needs boundedness of the scaled terms.
DualPartReport part_k2_grid(const std::vector<double>& base, const std::vector<bool>& in_k1,
                            const std::vector<double>& pv, bool with_sup, const Thresholds& th) {
    DualPartReport part;
    part.name = "k2";
    std::vector<double> conj;
    std::vector<double> vals;
    for (std::size_t k = 0; k < base.size(); ++k) {
        if (!in_k1[k]) {
            vals.push_back(std::fabs(base[k]));
            conj.push_back(pv[k] / (pv[k] - 1.0));
        }
    }
    part.indices = static_cast<Index>(vals.size());
    part.grid = kMGrid;
    if (vals.empty()) {
        part.verdict = {VerdictTag::ConvergentNumeric, "no indices in range"};
        return part;
    }
    std::vector<Verdict> per_grid;
    bool captured = false;
    for (Index M : kMGrid) {
        std::vector<double> terms(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
            terms[i] = std::pow(vals[i] / static_cast<double>(M), conj[i]);
        SeriesProbe series = probe_series(terms, th);
        Verdict v = series.verdict;
        if (with_sup) {
            SupProbe sup = probe_sup(terms, th);
            v = combine_all({series.verdict, sup.verdict});
        }
        per_grid.push_back(v);
        bool decided_bounded = v.tag == VerdictTag::ConvergentNumeric && !captured;
        bool last = M == kMGrid.back();
        if (decided_bounded || (last && !captured)) {
            part.grid_point = M;
            part.sup = series.partial_sum;
            part.curve = series.curve;
            captured = true;
        }
    }
    part.verdict = combine_any(per_grid);
    return part;
}

DualReport combined_report(std::string which, Index N, DualPartReport k1, DualPartReport k2) {
    DualReport rep;
    rep.which = std::move(which);
    rep.N = N;
    rep.combined = combine_all({k1.verdict, k2.verdict});
    rep.part_k1 = std::move(k1);
    rep.part_k2 = std::move(k2);
    return rep;
}

}  // namespace

DualReport alpha_dual_check(const SeqSpec& a, const LambdaSeq& lambda, const ExponentSeq& p,
                            Index N, const Thresholds& th) {
    lambda.require_valid(N + 1);
    p.require_valid(N);
    std::vector<double> padded = lambda.padded_values<double>(N + 1);
    std::vector<double> av = a.values_f64(N + 1);
    std::vector<double> pv = p.spec().values_f64(N);

    // Sign-split subset sup of column k's two entries.
    std::vector<double> base(static_cast<std::size_t>(N) + 1);
    std::vector<bool> in_k1(base.size());
    for (Index k = 0; k <= N; ++k) {
        auto i = static_cast<std::size_t>(k);
        double top = padded[i + 1] * av[i] / (padded[i + 1] - padded[i]);
        double bottom = -(padded[i + 1] * av[i + 1]) / (padded[i + 2] - padded[i + 1]);
        double pos = 0.0;
        double neg = 0.0;
        (top >= 0 ? pos : neg) += top;
        (bottom >= 0 ? pos : neg) += bottom;
        base[i] = std::max(pos, -neg);
        in_k1[i] = pv[i] <= 1.0;
    }

    DualPartReport k1 = part_k1_sup(base, in_k1, pv, th);
    DualPartReport k2 = part_k2_grid(base, in_k1, pv, /*with_sup=*/false, th);
    return combined_report("alpha", N, std::move(k1), std::move(k2));
}

DualReport beta_gamma_dual_check(const SeqSpec& a, const LambdaSeq& lambda, const ExponentSeq& p,
                                 Index N, const std::string& which, const Thresholds& th) {
    if (which != "beta" && which != "gamma")
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              "dual kind must be alpha, beta or gamma");
    lambda.require_valid(N + 1);
    p.require_valid(N);
    std::vector<double> padded = lambda.padded_values<double>(N + 1);
    std::vector<double> av = a.values_f64(N + 1);
    std::vector<double> pv = p.spec().values_f64(N);

    // base_k = max(|s1_k|, |s2_k|): sup/sum conditions on both sequences at
    // once, since sup max = max sup and sums of max bound both sums.
    std::vector<double> base(static_cast<std::size_t>(N) + 1);
    std::vector<bool> in_k1(base.size());
    for (Index k = 0; k <= N; ++k) {
        auto i = static_cast<std::size_t>(k);
        double u_here = av[i] / (padded[i + 1] - padded[i]);
        double u_next = av[i + 1] / (padded[i + 2] - padded[i + 1]);
        double s1 = (u_here - u_next) * padded[i + 1];
        double s2 = av[i] * padded[i + 1] / (padded[i + 1] - padded[i]);
        base[i] = std::max(std::fabs(s1), std::fabs(s2));
        in_k1[i] = pv[i] <= 1.0;
    }

    DualPartReport k1 = part_k1_sup(base, in_k1, pv, th);
    DualPartReport k2 = part_k2_grid(base, in_k1, pv, /*with_sup=*/true, th);
    return combined_report(which, N, std::move(k1), std::move(k2));
}

}  // namespace seqspace

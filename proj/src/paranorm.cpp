#include "seqspace/paranorm.hpp"

#include <cmath>
#include <limits>

#include "seqspace/utils.hpp"

namespace seqspace {

namespace {

std::vector<double> power_terms_f64(const std::vector<double>& y, const ExponentSeq& p) {
    std::vector<double> t(y.size());
    std::vector<double> pv = p.spec().values_f64(static_cast<Index>(y.size()) - 1);
    parallel_for(static_cast<Index>(y.size()), [&](Index i) {
        t[static_cast<std::size_t>(i)] =
            std::pow(std::fabs(y[static_cast<std::size_t>(i)]), pv[static_cast<std::size_t>(i)]);
    });
    return t;
}

ParanormReport finish_report(std::vector<double> terms, const ExponentSeq& p,
                             const Thresholds& th, Mode mode, Scalar partial,
                             std::string precision_note) {
    ParanormReport rep;
    rep.N = static_cast<Index>(terms.size()) - 1;
    rep.mode = mode;
    rep.M = p.M();
    rep.probe = probe_series(terms, th);
    rep.verdict = rep.probe.verdict;
    rep.partial_sum = std::move(partial);
    rep.partial_sum_f64 = scalar_to_double(rep.partial_sum);
    rep.estimate = std::pow(rep.partial_sum_f64, 1.0 / rep.M);
    rep.precision_note = std::move(precision_note);
    return rep;
}

}  // namespace

ParanormReport paranorm_values_f64(const std::vector<double>& y, const ExponentSeq& p,
                                   const Thresholds& th, std::string precision_note) {
    std::vector<double> terms = power_terms_f64(y, p);
    double partial = 0.0;
    for (double t : terms) partial += t;
    return finish_report(std::move(terms), p, th, Mode::Float64, partial,
                         std::move(precision_note));
}

ParanormReport paranorm_values_exact(const std::vector<Rational>& y, const ExponentSeq& p,
                                     const Thresholds& th) {
    const Index N = static_cast<Index>(y.size()) - 1;
    std::vector<Rational> pv = p.spec().values_exact(N);
    for (const Rational& pe : pv) {
        if (!pe.is_integer()) {
            // Fractional powers have no exact value; fall back to float and say so.
            std::vector<double> yf(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) yf[i] = y[i].to_double();
            ParanormReport rep = paranorm_values_f64(
                yf, p, th,
                "exponent " + pe.to_string() +
                    " is not an integer; terms evaluated in binary float");
            rep.mode = Mode::Exact;
            return rep;
        }
    }
    std::vector<Rational> terms(y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        terms[i] = pow_int(abs(y[i]), pv[i].to_integer());
    std::vector<double> terms_f64(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms_f64[i] = terms[i].to_double();
    Rational partial = sum_pairwise(std::move(terms));
    return finish_report(std::move(terms_f64), p, th, Mode::Exact, std::move(partial), {});
}

ParanormReport paranorm_ellp(const SeqSpec& y, const ExponentSeq& p, Index N, Mode mode,
                             const Thresholds& th) {
    if (N < 0) throw ValidationError(ValidationError::Code::InvalidHorizon, "horizon must be >= 0");
    p.require_valid(N);
    if (mode == Mode::Exact) return paranorm_values_exact(y.values_exact(N), p, th);
    return paranorm_values_f64(y.values_f64(N), p, th);
}

ParanormReport paranorm_lambda(const SeqSpec& x, const LambdaSeq& lambda, const ExponentSeq& p,
                               Index N, Mode mode, const Thresholds& th) {
    if (N < 0) throw ValidationError(ValidationError::Code::InvalidHorizon, "horizon must be >= 0");
    lambda.require_valid(N);
    p.require_valid(N);
    if (mode == Mode::Exact) return paranorm_values_exact(lambda_transform<Rational>(lambda, x, N), p, th);
    return paranorm_values_f64(lambda_transform<double>(lambda, x, N), p, th);
}

const char* space_name(SpaceKind s) {
    switch (s) {
        case SpaceKind::EllP: return "ellp";
        case SpaceKind::EllLambda: return "ell_lambda";
        case SpaceKind::C0Lambda: return "c0_lambda";
    }
    return "?";
}

MembershipReport membership(const SeqSpec& x, SpaceKind space,
                            const std::shared_ptr<const LambdaSeq>& lambda, const ExponentSeq& p,
                            Index N, Mode mode, const Thresholds& th) {
    MembershipReport rep;
    rep.space = space;
    rep.N = N;
    switch (space) {
        case SpaceKind::EllP: {
            rep.paranorm = paranorm_ellp(x, p, N, mode, th);
            rep.verdict = rep.paranorm->verdict;
            return rep;
        }
        case SpaceKind::EllLambda: {
            if (!lambda)
                throw ValidationError(ValidationError::Code::InvalidSpec,
                                      "this space needs a weight sequence");
            rep.paranorm = paranorm_lambda(x, *lambda, p, N, mode, th);
            rep.verdict = rep.paranorm->verdict;
            return rep;
        }
        case SpaceKind::C0Lambda: {
            if (!lambda)
                throw ValidationError(ValidationError::Code::InvalidSpec,
                                      "this space needs a weight sequence");
            lambda->require_valid(N);
            p.require_valid(N);
            std::vector<double> y = lambda_transform<double>(*lambda, x, N);
            rep.limit = probe_limit_zero(power_terms_f64(y, p), th);
            rep.verdict = rep.limit->verdict;
            return rep;
        }
    }
    throw ValidationError(ValidationError::Code::InvalidSpec, "unknown space");
}

Witness witness_strict_inclusion(std::shared_ptr<const LambdaSeq> lambda) {
    SeqSpec y = SeqSpec::closed_form("(n+1)^-(1/(1+1/(n+1)))");
    auto y_ptr = std::make_shared<const SeqSpec>(y);
    SeqSpec x = derived_inverse_transform(std::move(lambda), y_ptr);
    ExponentSeq p(SeqSpec::closed_form("1+1/(n+1)"), 2.0);
    return Witness{std::move(x), std::move(y), std::move(p)};
}

Thm4Report theorem4_check(const SeqSpec& x, const LambdaSeq& lambda, const ExponentSeq& p,
                          Index N, const Thresholds& th) {
    lambda.require_valid(N);
    p.require_valid(N);
    std::vector<double> pv = p.spec().values_f64(N);
    for (Index k = 0; k <= N; ++k)
        if (pv[static_cast<std::size_t>(k)] < 1.0)
            throw ValidationError(ValidationError::Code::HypothesisViolated,
                                  "exponent at index " + std::to_string(k) +
                                      " is below 1; this check assumes 1 <= p_k",
                                  k);

    std::vector<double> padded = lambda.padded_values<double>(N);
    std::vector<double> xs = x.values_f64(N);
    std::vector<double> ys = lambda_transform_values(padded, xs);
    std::vector<double> ss = s_operator_values(padded, xs);

    Thm4Report rep;
    rep.N = N;
    ParanormReport rx = paranorm_values_f64(xs, p, th);
    ParanormReport ry = paranorm_values_f64(ys, p, th);
    ParanormReport rs = paranorm_values_f64(ss, p, th);
    rep.x_in_ellp = rx.verdict;
    rep.transform_in_ellp = ry.verdict;
    rep.s_in_ellp = rs.verdict;

    auto conv = [](const Verdict& v) { return v.tag == VerdictTag::ConvergentNumeric; };
    auto div = [](const Verdict& v) { return v.tag == VerdictTag::DivergentNumeric; };
    bool forward_violated = conv(rep.x_in_ellp) && conv(rep.transform_in_ellp) && div(rep.s_in_ellp);
    bool converse_violated = conv(rep.s_in_ellp) && conv(rep.transform_in_ellp) && div(rep.x_in_ellp);
    rep.consistent = !forward_violated && !converse_violated;
    if (!rep.consistent)
        rep.note = forward_violated
                       ? "x and its transform test summable but S(x) tests divergent"
                       : "S(x) and the transform test summable but x tests divergent";
    else if (rep.x_in_ellp.tag == VerdictTag::Inconclusive ||
             rep.transform_in_ellp.tag == VerdictTag::Inconclusive ||
             rep.s_in_ellp.tag == VerdictTag::Inconclusive)
        rep.note = "some verdicts inconclusive; implication not testable at this horizon";
    else
        rep.note = "verdicts consistent with the equivalence";

    // Truncated triangle inequalities at every prefix.
    const double M = p.M();
    double Px = 0.0, Py = 0.0, Ps = 0.0;
    for (Index n = 0; n <= N; ++n) {
        auto i = static_cast<std::size_t>(n);
        Px += std::pow(std::fabs(xs[i]), pv[i]);
        Py += std::pow(std::fabs(ys[i]), pv[i]);
        Ps += std::pow(std::fabs(ss[i]), pv[i]);
        double hx = std::pow(Px, 1.0 / M);
        double hy = std::pow(Py, 1.0 / M);
        double hs = std::pow(Ps, 1.0 / M);
        bool subadd = hs <= hx + hy + 1e-12 * (1.0 + hx + hy);
        bool decomp = hx <= hs + hy + 1e-12 * (1.0 + hs + hy);
        if (!subadd) rep.triangle_subadd_ok = false;
        if (!decomp) rep.triangle_decomp_ok = false;
        if ((!subadd || !decomp) && rep.first_triangle_violation < 0)
            rep.first_triangle_violation = n;
    }
    return rep;
}

Thm5Report theorem5_check(const SeqSpec& x, const LambdaSeq& lambda, const ExponentSeq& p,
                          Index N, const Thresholds& th) {
    lambda.require_valid(N);
    p.require_valid(N);
    std::vector<double> pv = p.spec().values_f64(N);
    bool all_above = true;
    bool all_below = true;
    for (double e : pv) {
        if (!(e > 1.0)) all_above = false;
        if (!(e < 1.0)) all_below = false;
    }
    if (!all_above && !all_below)
        throw ValidationError(ValidationError::Code::MixedExponents,
                              "exponents must be all > 1 or all < 1 for this check");

    Thm5Report rep;
    rep.N = N;
    rep.case_tag = all_above ? "i" : "ii";

    std::vector<double> u = lambda_transform<double>(lambda, x, N);
    for (double& v : u) v = std::fabs(v);

    Index m = 0;
    for (Index n = N; n >= 0; --n) {
        if (u[static_cast<std::size_t>(n)] >= 1.0) {
            m = n + 1;
            break;
        }
        if (n == 0) break;
    }
    if (m > N) {
        rep.comparison_vacuous = true;
        rep.settle_index = -1;
        rep.note = "|transform| < 1 never settles before the horizon; termwise comparison vacuous";
    } else {
        rep.settle_index = m;
    }

    std::vector<double> lp_terms(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) lp_terms[i] = std::pow(u[i], pv[i]);

    if (!rep.comparison_vacuous) {
        double gap = -std::numeric_limits<double>::infinity();
        for (Index n = m; n <= N; ++n) {
            auto i = static_cast<std::size_t>(n);
            double g = all_above ? lp_terms[i] - u[i] : u[i] - lp_terms[i];
            gap = std::max(gap, g);
        }
        rep.termwise_max_gap = gap;
        rep.termwise_ok = gap <= 1e-15;
        if (rep.note.empty())
            rep.note = all_above ? "termwise |t|^p <= |t| holds once |t| < 1"
                                 : "termwise |t| <= |t|^p holds once |t| < 1";
    }

    rep.series_l1 = probe_series(u, th).verdict;
    rep.series_lp = probe_series(lp_terms, th).verdict;

    auto conv = [](const Verdict& v) { return v.tag == VerdictTag::ConvergentNumeric; };
    auto div = [](const Verdict& v) { return v.tag == VerdictTag::DivergentNumeric; };
    rep.implication_ok = all_above ? !(conv(rep.series_l1) && div(rep.series_lp))
                                   : !(conv(rep.series_lp) && div(rep.series_l1));
    return rep;
}

}  // namespace seqspace

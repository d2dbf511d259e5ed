#include "seqspace/json_out.hpp"

#include <cmath>

namespace seqspace {

using nlohmann::json;

json json_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

json json_rational(const Rational& r) {
    return json{{"num", r.num_str()}, {"den", r.den_str()}};
}

json json_scalar(const Scalar& s) {
    if (std::holds_alternative<double>(s)) return json_number(std::get<double>(s));
    return json_rational(std::get<Rational>(s));
}

json json_verdict(const Verdict& v) {
    return json{{"tag", verdict_name(v.tag)}, {"rationale", v.rationale}};
}

json json_curve(const std::vector<CurvePoint>& curve) {
    json arr = json::array();
    for (const CurvePoint& p : curve) arr.push_back(json{{"N", p.N}, {"value", json_number(p.value)}});
    return arr;
}

json json_values(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(json_number(x));
    return arr;
}

json json_values(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const Rational& x : v) arr.push_back(json_rational(x));
    return arr;
}

json json_series_probe(const SeriesProbe& p) {
    return json{{"verdict", json_verdict(p.verdict)},
                {"partial_sum", json_number(p.partial_sum)},
                {"last_term", json_number(p.last_term)},
                {"window_start", p.window_start},
                {"window_term_min", json_number(p.window_term_min)},
                {"window_term_max", json_number(p.window_term_max)},
                {"tail_estimate", json_number(p.tail_estimate)},
                {"growth_ratio", json_number(p.growth_ratio)},
                {"curve", json_curve(p.curve)}};
}

json json_sup_probe(const SupProbe& p) {
    return json{{"verdict", json_verdict(p.verdict)},
                {"sup", json_number(p.sup)},
                {"arg", p.arg},
                {"decade_ratio", json_number(p.decade_ratio)},
                {"curve", json_curve(p.curve)}};
}

json json_limit_zero(const LimitZeroProbe& p) {
    return json{{"verdict", json_verdict(p.verdict)},
                {"window_start", p.window_start},
                {"reference_sup", json_number(p.reference_sup)},
                {"trailing_sup", json_number(p.trailing_sup)},
                {"curve", json_curve(p.curve)}};
}

json json_lambda_report(const LambdaReport& r) {
    return json{{"ok", r.ok},
                {"issue", r.issue},
                {"index", r.index},
                {"lambda_first", json_number(r.lambda_first)},
                {"lambda_last", json_number(r.lambda_last)},
                {"growth_uncertified", r.growth_uncertified}};
}

json json_paranorm(const ParanormReport& r) {
    return json{{"N", r.N},
                {"mode", mode_name(r.mode)},
                {"partial_sum", json_scalar(r.partial_sum)},
                {"partial_sum_f64", json_number(r.partial_sum_f64)},
                {"estimate", json_number(r.estimate)},
                {"M", json_number(r.M)},
                {"verdict", json_verdict(r.verdict)},
                {"probe", json_series_probe(r.probe)},
                {"precision_note", r.precision_note}};
}

json json_membership(const MembershipReport& r) {
    json j{{"space", space_name(r.space)}, {"N", r.N}, {"verdict", json_verdict(r.verdict)}};
    if (r.paranorm) {
        j["paranorm"] = json_paranorm(*r.paranorm);
        j["estimate"] = json_number(r.paranorm->estimate);
    }
    if (r.limit) j["limit"] = json_limit_zero(*r.limit);
    return j;
}

json json_thm4(const Thm4Report& r) {
    return json{{"N", r.N},
                {"x_in_ellp", json_verdict(r.x_in_ellp)},
                {"transform_in_ellp", json_verdict(r.transform_in_ellp)},
                {"s_in_ellp", json_verdict(r.s_in_ellp)},
                {"consistent", r.consistent},
                {"triangle_subadd_ok", r.triangle_subadd_ok},
                {"triangle_decomp_ok", r.triangle_decomp_ok},
                {"first_triangle_violation", r.first_triangle_violation},
                {"note", r.note}};
}

json json_thm5(const Thm5Report& r) {
    return json{{"N", r.N},
                {"case", r.case_tag},
                {"settle_index", r.settle_index},
                {"comparison_vacuous", r.comparison_vacuous},
                {"termwise_max_gap", json_number(r.termwise_max_gap)},
                {"termwise_ok", r.termwise_ok},
                {"series_l1", json_verdict(r.series_l1)},
                {"series_lp", json_verdict(r.series_lp)},
                {"implication_ok", r.implication_ok},
                {"note", r.note}};
}

namespace {

json json_dual_part(const DualPartReport& p) {
    json j{{"name", p.name},
           {"indices", p.indices},
           {"verdict", json_verdict(p.verdict)},
           {"sup", json_number(p.sup)},
           {"curve", json_curve(p.curve)}};
    if (!p.grid.empty()) {
        j["grid"] = p.grid;
        j["grid_point"] = p.grid_point;
    }
    return j;
}

}  // namespace

json json_dual(const DualReport& r) {
    return json{{"which", r.which},
                {"N", r.N},
                {"part_k1", json_dual_part(r.part_k1)},
                {"part_k2", json_dual_part(r.part_k2)},
                {"combined", json_verdict(r.combined)}};
}

json json_condition(const ConditionResult& r) {
    json j{{"id", r.id},
           {"N", r.N},
           {"verdict", json_verdict(r.verdict)},
           {"extremum", json_number(r.extremum)},
           {"witness_index", r.witness_index},
           {"witness_curve", json_curve(r.curve)},
           {"note", r.note}};
    if (!r.grid_M.empty()) {
        j["grid_M"] = r.grid_M;
        j["chosen_M"] = r.chosen_M;
    }
    if (!r.grid_L.empty()) {
        j["grid_L"] = r.grid_L;
        j["chosen_L"] = r.chosen_L;
    }
    return j;
}

json json_classification(const ClassificationResult& r) {
    json conds = json::array();
    for (const ConditionResult& c : r.conditions) conds.push_back(json_condition(c));
    return json{{"target", r.target},
                {"N", r.N},
                {"conditions", conds},
                {"combined", json_verdict(r.combined)}};
}

std::string csv_cell(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return json(v).dump();
}

std::string csv_cell(const Rational& v) { return v.to_string(); }

}  // namespace seqspace

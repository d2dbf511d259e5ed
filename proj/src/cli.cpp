#include "seqspace/cli.hpp"

#include <algorithm>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqspace/json_out.hpp"
#include "seqspace/lambda_ops.hpp"
#include "seqspace/spec_args.hpp"

namespace seqspace {

namespace {

using nlohmann::json;

Mode parse_mode(const std::string& mode) {
    if (mode == "float") return Mode::Float64;
    if (mode == "rational") return Mode::Exact;
    throw ValidationError(ValidationError::Code::InvalidSpec,
                          "mode must be float or rational, got \"" + mode + "\"");
}

void require_exact_capable(const SeqSpec& s, const char* what) {
    std::string why;
    if (s.certainly_not_exact(&why))
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              std::string(what) + " cannot run in rational mode: " + why);
}

// ------------------------------------------------------------- rendering

void render_lines(std::ostream& out, const json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_lines(out, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j) scalars = scalars && !v.is_structured();
        if (scalars) {
            out << prefix << ":";
            for (const auto& v : j) out << " " << (v.is_string() ? v.get<std::string>() : v.dump());
            out << "\n";
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                render_lines(out, j[i], prefix + "[" + std::to_string(i) + "]");
        }
        return;
    }
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void emit_report(std::ostream& out, const std::string& format, const json& j) {
    if (format == "json") {
        out << j.dump(2) << "\n";
    } else if (format == "table") {
        render_lines(out, j, "");
    } else {
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              "format \"" + format + "\" is not available for this command");
    }
}

struct Common {
    Index N = 0;
    std::string mode = "float";
    std::string format = "json";
    Thresholds th;
};

void add_common(CLI::App* sub, Common& c, bool with_mode = true) {
    sub->add_option("--N", c.N, "truncation horizon (values 0..N)")
        ->required()
        ->check(CLI::Range(static_cast<Index>(1), static_cast<Index>(100000000)));
    if (with_mode)
        sub->add_option("--mode", c.mode, "float | rational")
            ->check(CLI::IsMember({"float", "rational"}));
    sub->add_option("--format", c.format, "table | json | csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_thresholds(CLI::App* sub, Thresholds& th) {
    sub->add_option("--tail-tol", th.tail_tol, "absolute tail tolerance");
    sub->add_option("--tail-rel-tol", th.tail_rel_tol, "tail tolerance relative to the partial sum");
    sub->add_option("--divergence-cap", th.divergence_cap, "sums/sups beyond this are divergence");
    sub->add_option("--window-frac", th.window_frac, "trailing window fraction");
    sub->add_option("--flat-ratio", th.flat_ratio, "max/min ratio that reads as flat");
    sub->add_option("--term-floor", th.term_floor, "flat terms above this fail the term test");
    sub->add_option("--harmonic-floor", th.harmonic_floor, "floor for the (n+1)*t_n bound");
    sub->add_option("--harmonic-slope", th.harmonic_slope, "max fitted slope for the harmonic rule");
    sub->add_option("--c0-drop", th.c0_drop, "trailing sup fraction that reads as decay");
    sub->add_option("--c0-stall", th.c0_stall, "trailing sup fraction that reads as a stall");
    sub->add_option("--sup-growth", th.sup_growth, "sup growth ratio across a decade");
    sub->add_option("--limit-dev-rel", th.limit_dev_rel, "column-limit stability tolerance");
}

// -------------------------------------------------------------- commands

struct SeqArgs {
    Common c;
    std::string lambda;
    std::string seq;
};

int run_sequence_command(std::ostream& out, const SeqArgs& a, const char* command,
                         const char* value_name) {
    Mode mode = parse_mode(a.c.mode);
    LambdaSeq lam(parse_seq_arg(a.lambda));
    SeqSpec s = parse_seq_arg(a.seq);
    lam.require_valid(a.c.N);
    if (mode == Mode::Exact) {
        require_exact_capable(lam.spec(), "the weight sequence");
        require_exact_capable(s, "the input sequence");
    }

    json values;
    std::vector<double> vf;
    std::vector<Rational> vx;
    auto compute = [&](auto tag) {
        using T = decltype(tag);
        std::vector<T> v;
        if (std::string(command) == "transform")
            v = lambda_transform<T>(lam, s, a.c.N);
        else if (std::string(command) == "inverse")
            v = inverse_transform<T>(lam, s, a.c.N);
        else
            v = s_operator<T>(lam, s, a.c.N);
        return v;
    };
    if (mode == Mode::Exact) {
        vx = compute(Rational());
        values = json_values(vx);
    } else {
        vf = compute(double());
        values = json_values(vf);
    }

    if (a.c.format == "csv") {
        out << "n," << value_name << "\n";
        for (Index n = 0; n <= a.c.N; ++n) {
            auto i = static_cast<std::size_t>(n);
            out << n << "," << (mode == Mode::Exact ? csv_cell(vx[i]) : csv_cell(vf[i])) << "\n";
        }
        return 0;
    }
    json j{{"command", command},
           {"N", a.c.N},
           {"mode", mode_name(mode)},
           {"values", values}};
    if (a.c.format == "json") {
        out << j.dump(2) << "\n";
        return 0;
    }
    for (Index n = 0; n <= a.c.N; ++n) {
        auto i = static_cast<std::size_t>(n);
        out << n << "\t" << (mode == Mode::Exact ? vx[i].to_string() : csv_cell(vf[i])) << "\n";
    }
    return 0;
}

SpaceKind parse_space(const std::string& s) {
    if (s == "ellp") return SpaceKind::EllP;
    if (s == "ell_lambda") return SpaceKind::EllLambda;
    if (s == "c0_lambda") return SpaceKind::C0Lambda;
    throw ValidationError(ValidationError::Code::InvalidSpec,
                          "space must be ellp, ell_lambda or c0_lambda, got \"" + s + "\"");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite-truncation calculator for weighted-mean sequence spaces"};
    app.require_subcommand(1);

    // transform | inverse | soperator
    SeqArgs tr, inv, sop;
    CLI::App* c_tr = app.add_subcommand("transform", "weighted-mean transform of a sequence");
    c_tr->add_option("--lambda", tr.lambda, "weight sequence spec")->required();
    c_tr->add_option("--x", tr.seq, "input sequence spec")->required();
    add_common(c_tr, tr.c);

    CLI::App* c_inv = app.add_subcommand("inverse", "inverse of the weighted-mean transform");
    c_inv->add_option("--lambda", inv.lambda, "weight sequence spec")->required();
    c_inv->add_option("--y", inv.seq, "transformed sequence spec")->required();
    add_common(c_inv, inv.c);

    CLI::App* c_sop = app.add_subcommand("soperator", "difference-weighted companion operator");
    c_sop->add_option("--lambda", sop.lambda, "weight sequence spec")->required();
    c_sop->add_option("--x", sop.seq, "input sequence spec")->required();
    add_common(c_sop, sop.c);

    // paranorm
    Common pn_c;
    std::string pn_lambda, pn_p, pn_x, pn_space = "ell_lambda";
    double pn_pb = 0.0;
    CLI::App* c_pn = app.add_subcommand("paranorm", "total paranorm of a sequence");
    c_pn->add_option("--lambda", pn_lambda, "weight sequence spec");
    c_pn->add_option("--p", pn_p, "exponent sequence spec")->required();
    c_pn->add_option("--p-bound", pn_pb, "declared sup of the exponents");
    c_pn->add_option("--x", pn_x, "sequence spec")->required();
    c_pn->add_option("--space", pn_space, "ellp | ell_lambda")
        ->check(CLI::IsMember({"ellp", "ell_lambda"}));
    add_common(c_pn, pn_c);
    add_thresholds(c_pn, pn_c.th);

    // member
    Common mb_c;
    std::string mb_lambda, mb_p, mb_x, mb_space;
    double mb_pb = 0.0;
    CLI::App* c_mb = app.add_subcommand("member", "membership evidence for a sequence space");
    c_mb->add_option("--space", mb_space, "ellp | ell_lambda | c0_lambda")->required();
    c_mb->add_option("--lambda", mb_lambda, "weight sequence spec");
    c_mb->add_option("--p", mb_p, "exponent sequence spec")->required();
    c_mb->add_option("--p-bound", mb_pb, "declared sup of the exponents");
    c_mb->add_option("--x", mb_x, "sequence spec")->required();
    add_common(c_mb, mb_c);
    add_thresholds(c_mb, mb_c.th);

    // witness
    Common wt_c;
    std::string wt_lambda = "n+1";
    CLI::App* c_wt = app.add_subcommand(
        "witness", "strict-inclusion witness: transform tends to zero, exponent series diverges");
    c_wt->add_option("--lambda", wt_lambda, "weight sequence spec (default n+1)");
    add_common(c_wt, wt_c, /*with_mode=*/false);
    add_thresholds(c_wt, wt_c.th);

    // thm4 / thm5
    Common t4_c, t5_c;
    std::string t4_lambda, t4_p, t4_x, t5_lambda, t5_p, t5_x;
    double t4_pb = 0.0, t5_pb = 0.0;
    CLI::App* c_t4 = app.add_subcommand(
        "thm4", "splitting check: x summable iff transform and companion both are");
    c_t4->add_option("--lambda", t4_lambda, "weight sequence spec")->required();
    c_t4->add_option("--p", t4_p, "exponent sequence spec (needs p >= 1)")->required();
    c_t4->add_option("--p-bound", t4_pb, "declared sup of the exponents");
    c_t4->add_option("--x", t4_x, "sequence spec")->required();
    add_common(c_t4, t4_c, false);
    add_thresholds(c_t4, t4_c.th);

    CLI::App* c_t5 = app.add_subcommand(
        "thm5", "inclusion check between the plain and exponent-weighted transform series");
    c_t5->add_option("--lambda", t5_lambda, "weight sequence spec")->required();
    c_t5->add_option("--p", t5_p, "exponent sequence spec (one side of 1)")->required();
    c_t5->add_option("--p-bound", t5_pb, "declared sup of the exponents");
    c_t5->add_option("--x", t5_x, "sequence spec")->required();
    add_common(c_t5, t5_c, false);
    add_thresholds(c_t5, t5_c.th);

    // dual
    Common du_c;
    std::string du_which, du_lambda, du_p, du_a;
    double du_pb = 0.0;
    CLI::App* c_du = app.add_subcommand("dual", "dual-space membership evidence for a sequence a");
    c_du->add_option("--which", du_which, "alpha | beta | gamma")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta", "gamma"}));
    c_du->add_option("--lambda", du_lambda, "weight sequence spec")->required();
    c_du->add_option("--p", du_p, "exponent sequence spec")->required();
    c_du->add_option("--p-bound", du_pb, "declared sup of the exponents");
    c_du->add_option("--a", du_a, "candidate dual sequence spec")->required();
    add_common(c_du, du_c, false);
    add_thresholds(c_du, du_c.th);

    // tilde
    Common ti_c;
    std::string ti_lambda, ti_A;
    Index ti_corner = -1;
    CLI::App* c_ti = app.add_subcommand("tilde", "aligned matrix entries at finite truncation");
    c_ti->add_option("--A", ti_A, "matrix spec")->required();
    c_ti->add_option("--lambda", ti_lambda, "weight sequence spec")->required();
    c_ti->add_option("--corner", ti_corner, "print rows/columns 0..corner (default min(N, 9))");
    add_common(c_ti, ti_c);

    // condition
    Common co_c;
    std::string co_id, co_lambda, co_A, co_p, co_q;
    double co_pb = 0.0, co_qb = 0.0;
    CLI::App* c_co = app.add_subcommand("condition", "one mapping condition over the aligned matrix");
    c_co->add_option("--id", co_id, "condition id, 4.6 .. 4.21")->required();
    c_co->add_option("--A", co_A, "matrix spec")->required();
    c_co->add_option("--lambda", co_lambda, "weight sequence spec")->required();
    c_co->add_option("--p", co_p, "domain exponent sequence spec")->required();
    c_co->add_option("--p-bound", co_pb, "declared sup of the domain exponents");
    c_co->add_option("--q", co_q, "target exponent sequence spec (non-decreasing)")->required();
    c_co->add_option("--q-bound", co_qb, "declared sup of the target exponents");
    add_common(c_co, co_c, false);
    add_thresholds(c_co, co_c.th);

    // classify
    Common cl_c;
    std::string cl_target, cl_lambda, cl_A, cl_p, cl_q;
    double cl_pb = 0.0, cl_qb = 0.0;
    CLI::App* c_cl = app.add_subcommand("classify", "all conditions required for a target space");
    c_cl->add_option("--target", cl_target, "lq | c0q | cq | linfq")->required();
    c_cl->add_option("--A", cl_A, "matrix spec")->required();
    c_cl->add_option("--lambda", cl_lambda, "weight sequence spec")->required();
    c_cl->add_option("--p", cl_p, "domain exponent sequence spec")->required();
    c_cl->add_option("--p-bound", cl_pb, "declared sup of the domain exponents");
    c_cl->add_option("--q", cl_q, "target exponent sequence spec (non-decreasing)")->required();
    c_cl->add_option("--q-bound", cl_qb, "declared sup of the target exponents");
    add_common(c_cl, cl_c, false);
    add_thresholds(c_cl, cl_c.th);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(c_tr)) return run_sequence_command(out, tr, "transform", "y_n");
        if (app.got_subcommand(c_inv)) return run_sequence_command(out, inv, "inverse", "x_n");
        if (app.got_subcommand(c_sop)) return run_sequence_command(out, sop, "soperator", "s_n");

        if (app.got_subcommand(c_pn)) {
            Mode mode = parse_mode(pn_c.mode);
            ExponentSeq p = parse_exponent_arg(pn_p, pn_pb, "p");
            SeqSpec x = parse_seq_arg(pn_x);
            ParanormReport rep;
            if (pn_space == "ellp") {
                rep = paranorm_ellp(x, p, pn_c.N, mode, pn_c.th);
            } else {
                if (pn_lambda.empty())
                    throw ValidationError(ValidationError::Code::InvalidSpec,
                                          "--lambda is required for the ell_lambda paranorm");
                LambdaSeq lam(parse_seq_arg(pn_lambda));
                rep = paranorm_lambda(x, lam, p, pn_c.N, mode, pn_c.th);
            }
            emit_report(out, pn_c.format, json_paranorm(rep));
            return 0;
        }

        if (app.got_subcommand(c_mb)) {
            Mode mode = parse_mode(mb_c.mode);
            SpaceKind space = parse_space(mb_space);
            ExponentSeq p = parse_exponent_arg(mb_p, mb_pb, "p");
            SeqSpec x = parse_seq_arg(mb_x);
            std::shared_ptr<const LambdaSeq> lam;
            if (space != SpaceKind::EllP) {
                if (mb_lambda.empty())
                    throw ValidationError(ValidationError::Code::InvalidSpec,
                                          "--lambda is required for the lambda spaces");
                lam = std::make_shared<const LambdaSeq>(parse_seq_arg(mb_lambda));
            }
            MembershipReport rep = membership(x, space, lam, p, mb_c.N, mode, mb_c.th);
            emit_report(out, mb_c.format, json_membership(rep));
            return 0;
        }

        if (app.got_subcommand(c_wt)) {
            auto lam = std::make_shared<const LambdaSeq>(parse_seq_arg(wt_lambda));
            Witness w = witness_strict_inclusion(lam);
            MembershipReport in_c0 =
                membership(w.x, SpaceKind::C0Lambda, lam, w.p, wt_c.N, Mode::Float64, wt_c.th);
            MembershipReport in_lp =
                membership(w.x, SpaceKind::EllLambda, lam, w.p, wt_c.N, Mode::Float64, wt_c.th);
            json j{{"N", wt_c.N},
                   {"p", print_expr(*w.p.spec().expr())},
                   {"declared_sup", json_number(w.p.declared_sup())},
                   {"transform", print_expr(*w.y.expr())},
                   {"c0_lambda", json_membership(in_c0)},
                   {"ell_lambda", json_membership(in_lp)}};
            emit_report(out, wt_c.format, j);
            return 0;
        }

        if (app.got_subcommand(c_t4)) {
            ExponentSeq p = parse_exponent_arg(t4_p, t4_pb, "p");
            LambdaSeq lam(parse_seq_arg(t4_lambda));
            Thm4Report rep = theorem4_check(parse_seq_arg(t4_x), lam, p, t4_c.N, t4_c.th);
            emit_report(out, t4_c.format, json_thm4(rep));
            return 0;
        }

        if (app.got_subcommand(c_t5)) {
            ExponentSeq p = parse_exponent_arg(t5_p, t5_pb, "p");
            LambdaSeq lam(parse_seq_arg(t5_lambda));
            Thm5Report rep = theorem5_check(parse_seq_arg(t5_x), lam, p, t5_c.N, t5_c.th);
            emit_report(out, t5_c.format, json_thm5(rep));
            return 0;
        }

        if (app.got_subcommand(c_du)) {
            ExponentSeq p = parse_exponent_arg(du_p, du_pb, "p");
            LambdaSeq lam(parse_seq_arg(du_lambda));
            SeqSpec a = parse_seq_arg(du_a);
            DualReport rep = du_which == "alpha"
                                 ? alpha_dual_check(a, lam, p, du_c.N, du_c.th)
                                 : beta_gamma_dual_check(a, lam, p, du_c.N, du_which, du_c.th);
            emit_report(out, du_c.format, json_dual(rep));
            return 0;
        }

        if (app.got_subcommand(c_ti)) {
            Mode mode = parse_mode(ti_c.mode);
            MatrixSpec A = parse_matrix_arg(ti_A);
            LambdaSeq lam(parse_seq_arg(ti_lambda));
            TildeMatrix t = build_tilde(A, lam, ti_c.N, mode);
            Index corner = ti_corner >= 0 ? std::min(ti_corner, ti_c.N)
                                          : std::min<Index>(ti_c.N, 9);
            if (ti_c.format == "csv") {
                out << "n,k,aligned,scaled\n";
                for (Index n = 0; n <= corner; ++n)
                    for (Index k = 0; k <= corner; ++k) {
                        out << n << "," << k << ",";
                        if (t.exact_available())
                            out << csv_cell(t.at_exact(n, k)) << "," << csv_cell(t.scaled_at_exact(n, k));
                        else
                            out << csv_cell(t.at(n, k)) << "," << csv_cell(t.scaled_at(n, k));
                        out << "\n";
                    }
                return 0;
            }
            json rows = json::array();
            json scaled = json::array();
            for (Index n = 0; n <= corner; ++n) {
                json r = json::array();
                json s = json::array();
                for (Index k = 0; k <= corner; ++k) {
                    if (t.exact_available()) {
                        r.push_back(json_rational(t.at_exact(n, k)));
                        s.push_back(json_rational(t.scaled_at_exact(n, k)));
                    } else {
                        r.push_back(json_number(t.at(n, k)));
                        s.push_back(json_number(t.scaled_at(n, k)));
                    }
                }
                rows.push_back(r);
                scaled.push_back(s);
            }
            json j{{"N", ti_c.N},
                   {"corner", corner},
                   {"mode", mode_name(mode)},
                   {"aligned", rows},
                   {"scaled", scaled},
                   {"precision_note", t.precision_note()}};
            emit_report(out, ti_c.format, j);
            return 0;
        }

        if (app.got_subcommand(c_co)) {
            MatrixSpec A = parse_matrix_arg(co_A);
            LambdaSeq lam(parse_seq_arg(co_lambda));
            ExponentSeq p = parse_exponent_arg(co_p, co_pb, "p");
            ExponentSeq q = parse_exponent_arg(co_q, co_qb, "q");
            TildeMatrix t = build_tilde(A, lam, co_c.N, Mode::Float64);
            ConditionResult rep = eval_condition(co_id, t, p, q, co_c.N, co_c.th);
            emit_report(out, co_c.format, json_condition(rep));
            return 0;
        }

        if (app.got_subcommand(c_cl)) {
            MatrixSpec A = parse_matrix_arg(cl_A);
            LambdaSeq lam(parse_seq_arg(cl_lambda));
            ExponentSeq p = parse_exponent_arg(cl_p, cl_pb, "p");
            ExponentSeq q = parse_exponent_arg(cl_q, cl_qb, "q");
            ClassificationResult rep = classify(A, lam, p, q, cl_target, cl_c.N, cl_c.th);
            emit_report(out, cl_c.format, json_classification(rep));
            return 0;
        }

        err << "input error: no subcommand selected\n";
        return 2;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const EvalError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace seqspace

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "seqspace/cli.hpp"
#include "seqspace/json_out.hpp"
#include "seqspace/lambda_ops.hpp"
#include "seqspace/spec_args.hpp"

namespace py = pybind11;
using namespace seqspace;

namespace {

// Report-returning entry points hand back the same deterministic JSON the
// CLI prints; the python package decodes it into dicts.

LambdaSeq lam_of(const std::string& spec) { return LambdaSeq(parse_seq_arg(spec)); }

std::vector<double> py_transform(const std::string& lam, const std::string& x, Index N) {
    return lambda_transform<double>(lam_of(lam), parse_seq_arg(x), N);
}

std::vector<double> py_inverse(const std::string& lam, const std::string& y, Index N) {
    return inverse_transform<double>(lam_of(lam), parse_seq_arg(y), N);
}

std::vector<double> py_soperator(const std::string& lam, const std::string& x, Index N) {
    return s_operator<double>(lam_of(lam), parse_seq_arg(x), N);
}

std::string py_paranorm(const std::string& x, const std::string& lam, const std::string& p,
                        Index N, double p_bound) {
    ExponentSeq pe = parse_exponent_arg(p, p_bound, "p");
    ParanormReport rep =
        lam.empty() ? paranorm_ellp(parse_seq_arg(x), pe, N, Mode::Float64)
                    : paranorm_lambda(parse_seq_arg(x), lam_of(lam), pe, N, Mode::Float64);
    return json_paranorm(rep).dump();
}

std::string py_member(const std::string& space, const std::string& x, const std::string& lam,
                      const std::string& p, Index N, double p_bound) {
    SpaceKind kind;
    if (space == "ellp")
        kind = SpaceKind::EllP;
    else if (space == "ell_lambda")
        kind = SpaceKind::EllLambda;
    else if (space == "c0_lambda")
        kind = SpaceKind::C0Lambda;
    else
        throw ValidationError(ValidationError::Code::InvalidSpec,
                              "space must be ellp, ell_lambda or c0_lambda");
    std::shared_ptr<const LambdaSeq> lp;
    if (kind != SpaceKind::EllP) lp = std::make_shared<const LambdaSeq>(lam_of(lam));
    ExponentSeq pe = parse_exponent_arg(p, p_bound, "p");
    return json_membership(membership(parse_seq_arg(x), kind, lp, pe, N, Mode::Float64)).dump();
}

std::string py_dual(const std::string& which, const std::string& a, const std::string& lam,
                    const std::string& p, Index N, double p_bound) {
    ExponentSeq pe = parse_exponent_arg(p, p_bound, "p");
    DualReport rep = which == "alpha"
                         ? alpha_dual_check(parse_seq_arg(a), lam_of(lam), pe, N)
                         : beta_gamma_dual_check(parse_seq_arg(a), lam_of(lam), pe, N, which);
    return json_dual(rep).dump();
}

std::string py_condition(const std::string& id, const std::string& A, const std::string& lam,
                         const std::string& p, const std::string& q, Index N, double p_bound,
                         double q_bound) {
    TildeMatrix t = build_tilde(parse_matrix_arg(A), lam_of(lam), N, Mode::Float64);
    ExponentSeq pe = parse_exponent_arg(p, p_bound, "p");
    ExponentSeq qe = parse_exponent_arg(q, q_bound, "q");
    return json_condition(eval_condition(id, t, pe, qe, N, {})).dump();
}

std::string py_classify(const std::string& target, const std::string& A, const std::string& lam,
                        const std::string& p, const std::string& q, Index N, double p_bound,
                        double q_bound) {
    ExponentSeq pe = parse_exponent_arg(p, p_bound, "p");
    ExponentSeq qe = parse_exponent_arg(q, q_bound, "q");
    return json_classification(classify(parse_matrix_arg(A), lam_of(lam), pe, qe, target, N, {}))
        .dump();
}

py::tuple py_run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("seqspace");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_seqspace, m) {
    m.doc() = "finite-truncation calculator for weighted-mean sequence spaces";

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<EvalError>(m, "EvalError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("transform", &py_transform, py::arg("lam"), py::arg("x"), py::arg("N"),
          "Weighted-mean transform values y_0..y_N (float mode).");
    m.def("inverse", &py_inverse, py::arg("lam"), py::arg("y"), py::arg("N"),
          "Inverse transform values x_0..x_N (float mode).");
    m.def("soperator", &py_soperator, py::arg("lam"), py::arg("x"), py::arg("N"),
          "Companion operator values s_0..s_N (float mode).");
    m.def("paranorm_json", &py_paranorm, py::arg("x"), py::arg("lam"), py::arg("p"), py::arg("N"),
          py::arg("p_bound") = 0.0);
    m.def("member_json", &py_member, py::arg("space"), py::arg("x"), py::arg("lam"), py::arg("p"),
          py::arg("N"), py::arg("p_bound") = 0.0);
    m.def("dual_json", &py_dual, py::arg("which"), py::arg("a"), py::arg("lam"), py::arg("p"),
          py::arg("N"), py::arg("p_bound") = 0.0);
    m.def("condition_json", &py_condition, py::arg("id"), py::arg("A"), py::arg("lam"),
          py::arg("p"), py::arg("q"), py::arg("N"), py::arg("p_bound") = 0.0,
          py::arg("q_bound") = 0.0);
    m.def("classify_json", &py_classify, py::arg("target"), py::arg("A"), py::arg("lam"),
          py::arg("p"), py::arg("q"), py::arg("N"), py::arg("p_bound") = 0.0,
          py::arg("q_bound") = 0.0);
    m.def("run", &py_run, py::arg("args"),
          "Run the CLI in-process; returns (exit_code, stdout, stderr).");
}

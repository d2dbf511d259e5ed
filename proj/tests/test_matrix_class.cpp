#include <doctest.h>

#include <random>

#include "seqspace/lambda_ops.hpp"
#include "seqspace/matrix_class.hpp"
#include "seqspace/spec_args.hpp"

using namespace seqspace;

namespace {

const LambdaSeq kLinear{SeqSpec::closed_form("n+1")};
const ExponentSeq kOne{SeqSpec::closed_form("1"), 1.0};
const ExponentSeq kTwo{SeqSpec::closed_form("2"), 2.0};

}  // namespace

TEST_CASE("largest subset sum splits by sign") {
    CHECK(subset_sup({3.0, -5.0, 2.0}) == 5.0);
    CHECK(subset_sup({}) == 0.0);
    CHECK(subset_sup({-1.0, -2.0}) == 3.0);
    CHECK(subset_sup_exact({Rational(3), Rational(-5), Rational(2)}) == Rational(5));

    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    std::uniform_int_distribution<int> len(0, 12);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<double> v(static_cast<std::size_t>(len(rng)));
        for (double& x : v) x = val(rng);
        CHECK(subset_sup(v) == doctest::Approx(brute_force_subset_sup(v)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(static_cast<void>(brute_force_subset_sup(std::vector<double>(25, 1.0))),
                    ValidationError);
}

TEST_CASE("aligned matrix of the identity pins its two diagonals") {
    TildeMatrix t = build_tilde(parse_matrix_arg("identity"), kLinear, 64, Mode::Exact);
    REQUIRE(t.exact_available());
    for (Index n = 1; n <= 63; ++n) {
        CHECK(t.at_exact(n, n) == Rational(n + 1));
        CHECK(t.at_exact(n, n - 1) == Rational(-n));
        CHECK(t.at(n, n) == static_cast<double>(n + 1));
        if (n >= 2) CHECK(t.at_exact(n, n - 2) == Rational(0));
        CHECK(t.scaled_at_exact(n, n) == Rational(n + 1));
        CHECK(t.scaled_at_exact(n, n - 1) == Rational(0));
    }
    CHECK_THROWS_AS(static_cast<void>(t.at(65, 0)), ValidationError);
}

TEST_CASE("fractional-power matrices fall back to float with a note") {
    TildeMatrix t = build_tilde(parse_matrix_arg("diag:n^0.5"), kLinear, 16, Mode::Exact);
    CHECK(!t.exact_available());
    CHECK(!t.precision_note().empty());
    CHECK(t.at(2, 2) > 0.0);
}

TEST_CASE("partial sums against the domain factor through the aligned matrix") {
    std::mt19937 rng(40);
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    for (int trial = 0; trial < 4; ++trial) {
        // varied rational matrix built from a small closed form
        long long c0 = num(rng), c1 = num(rng), d = den(rng);
        std::string expr = "(" + std::to_string(c0) + (c1 < 0 ? "" : "+") +
                           std::to_string(c1) + "*n+k*k)/" + std::to_string(d);
        MatrixSpec A = trial % 2 == 0 ? MatrixSpec::triangle(parse_expr(expr))
                                      : MatrixSpec::closed_form(parse_expr(expr));
        std::vector<Rational> xv;
        for (Index i = 0; i <= 24; ++i) xv.emplace_back(num(rng), den(rng));
        SeqSpec x = SeqSpec::explicit_list(xv, Tail::zero());
        std::vector<Rational> y = lambda_transform<Rational>(kLinear, x, 24);

        TildeMatrix t = build_tilde(A, kLinear, 24, Mode::Exact);
        REQUIRE(t.exact_available());
        for (Index n = 0; n <= 24; ++n) {
            Rational lhs(0);
            for (Index m = 0; m <= 24; ++m) {
                lhs += A.entry_exact(n, m) * xv[static_cast<std::size_t>(m)];
                Rational rhs(0);
                for (Index k = 0; k < m; ++k)
                    rhs += t.at_exact(n, k) * y[static_cast<std::size_t>(k)];
                rhs += t.scaled_at_exact(n, m) * y[static_cast<std::size_t>(m)];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("column limits flag stability") {
    TildeMatrix t = build_tilde(parse_matrix_arg("identity"), kLinear, 400, Mode::Float64);
    ColumnLimit c = t.column_limit(3);
    CHECK(c.stable);
    CHECK(c.value == 0.0);

    // a_nk = 1/(n+1) for k <= n: columns of the aligned matrix settle at 0
    TildeMatrix avg = build_tilde(parse_matrix_arg("triangle:1/(n+1)"), kLinear, 400,
                                  Mode::Float64);
    ColumnLimit c2 = avg.column_limit(0, {});
    CHECK(c2.stable);
    CHECK(c2.value == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("single conditions pin easy verdicts") {
    TildeMatrix ident = build_tilde(parse_matrix_arg("identity"), kLinear, 1000, Mode::Float64);

    // each aligned column of the identity dies after two entries
    ConditionResult zero_cols = eval_condition("4.9", ident, kOne, kTwo, 1000, {});
    CHECK(zero_cols.verdict.tag == VerdictTag::ConvergentNumeric);

    // the aligned diagonal n+1 grows without bound
    ConditionResult sup_all = eval_condition("4.12", ident, kOne, kTwo, 1000, {});
    CHECK(sup_all.verdict.tag == VerdictTag::DivergentNumeric);
    CHECK(sup_all.extremum > 100.0);

    ConditionResult growth = eval_condition("4.17", ident, kOne, kTwo, 1000, {});
    CHECK(growth.verdict.tag == VerdictTag::DivergentNumeric);
    CHECK(!growth.grid_L.empty());

    TildeMatrix zero = build_tilde(parse_matrix_arg("zero"), kLinear, 1000, Mode::Float64);
    for (const char* id : {"4.6", "4.7", "4.8", "4.9", "4.10", "4.11", "4.12", "4.13", "4.14",
                           "4.15", "4.16", "4.17", "4.18", "4.19", "4.20", "4.21"}) {
        ConditionResult r = eval_condition(id, zero, kTwo, kTwo, 1000, {});
        CAPTURE(id);
        CHECK(r.verdict.tag == VerdictTag::ConvergentNumeric);
    }
}

TEST_CASE("condition inputs are validated") {
    TildeMatrix t = build_tilde(parse_matrix_arg("identity"), kLinear, 50, Mode::Float64);
    try {
        static_cast<void>(eval_condition("4.22", t, kOne, kTwo, 50, {}));
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::UnsupportedCondition);
    }
    ExponentSeq decreasing(
        SeqSpec::explicit_list({Rational(2), Rational(1)}, Tail::repeat_last()), 2.0);
    try {
        static_cast<void>(eval_condition("4.9", t, kOne, decreasing, 50, {}));
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.code() == ValidationError::Code::NotNondecreasing);
    }
    CHECK_THROWS_AS(static_cast<void>(eval_condition("4.9", t, kOne, kTwo, 51, {})),
                    ValidationError);
}

TEST_CASE("classification demands every condition for its target") {
    const std::vector<std::string>& lq = conditions_for_target("lq");
    CHECK(lq == std::vector<std::string>{"4.6", "4.7", "4.8", "4.19"});
    CHECK(conditions_for_target("cq").size() == 6);
    CHECK_THROWS_AS(static_cast<void>(conditions_for_target("zq")), ValidationError);

    ClassificationResult zero =
        classify(parse_matrix_arg("zero"), kLinear, kTwo, kTwo, "c0q", 600, {});
    CHECK(zero.combined.tag == VerdictTag::ConvergentNumeric);
    CHECK(zero.conditions.size() == 4);

    ClassificationResult ident =
        classify(parse_matrix_arg("identity"), kLinear, kOne, kTwo, "linfq", 600, {});
    CHECK(ident.combined.tag == VerdictTag::DivergentNumeric);

    ClassificationResult diag =
        classify(parse_matrix_arg("diag:2^-n"), kLinear, kTwo, kTwo, "lq", 1000, {});
    CHECK(diag.combined.tag == VerdictTag::ConvergentNumeric);
}

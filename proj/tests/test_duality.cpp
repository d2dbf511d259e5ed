#include <doctest.h>

#include <memory>
#include <random>

#include "seqspace/duality.hpp"
#include "seqspace/lambda_ops.hpp"

using namespace seqspace;

namespace {

std::shared_ptr<const SeqSpec> random_seq(std::mt19937& rng, Index N) {
    std::uniform_int_distribution<long long> num(-20, 20);
    std::uniform_int_distribution<long long> den(1, 20);
    std::vector<Rational> vals;
    for (Index i = 0; i <= N; ++i) vals.emplace_back(num(rng), den(rng));
    return std::make_shared<const SeqSpec>(SeqSpec::explicit_list(std::move(vals), Tail::zero()));
}

const auto kLinear = std::make_shared<const LambdaSeq>(SeqSpec::closed_form("n+1"));
const auto kGeometric = std::make_shared<const LambdaSeq>(SeqSpec::closed_form("2^n"));

}  // namespace

TEST_CASE("row-pair matrix entries follow the weight quotients") {
    auto ones = std::make_shared<const SeqSpec>(SeqSpec::closed_form("1"));
    DualMatrixD d = build_D(ones, kLinear);
    // lambda_n = n+1: diagonal n+1, subdiagonal -n, zero elsewhere
    CHECK(d.entry<Rational>(3, 3) == Rational(4));
    CHECK(d.entry<Rational>(3, 2) == Rational(-3));
    CHECK(d.entry<Rational>(3, 1) == Rational(0));
    CHECK(d.entry<Rational>(0, 0) == Rational(1));
    auto [top, bottom] = d.column<Rational>(2);
    CHECK(top == Rational(3));
    CHECK(bottom == Rational(-3));

    DualMatrixB b = build_B(ones, kLinear);
    // s2_k = lambda_k/(lambda_k - lambda_{k-1}), s1 telescopes to a_k - a_{k+1} scaled
    CHECK(b.s2<Rational>(4) == Rational(5));
    CHECK(b.s1<Rational>(4) == Rational(0));  // constant a
    CHECK(b.entry<Rational>(4, 4) == Rational(5));
    CHECK(b.entry<Rational>(4, 2) == Rational(0));
    CHECK(b.entry<Rational>(2, 4) == Rational(0));
}

TEST_CASE("term products factor through the transform") {
    std::mt19937 rng(314);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_seq(rng, 100);
        auto x = random_seq(rng, 100);
        for (const auto& lam : {kLinear, kGeometric}) {
            std::vector<Rational> y = lambda_transform<Rational>(*lam, *x, 100);
            std::vector<Rational> xv = x->values_exact(100);
            std::vector<Rational> av = a->values_exact(100);
            DualMatrixD d(a, lam);
            for (Index n = 0; n <= 100; ++n) {
                Rational lhs = av[static_cast<std::size_t>(n)] * xv[static_cast<std::size_t>(n)];
                Rational rhs = d.entry<Rational>(n, n) * y[static_cast<std::size_t>(n)];
                if (n > 0)
                    rhs += d.entry<Rational>(n, n - 1) * y[static_cast<std::size_t>(n - 1)];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("partial sums of term products factor through the transform") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_seq(rng, 100);
        auto x = random_seq(rng, 100);
        for (const auto& lam : {kLinear, kGeometric}) {
            std::vector<Rational> y = lambda_transform<Rational>(*lam, *x, 100);
            std::vector<Rational> xv = x->values_exact(100);
            std::vector<Rational> av = a->values_exact(100);
            DualMatrixB b(a, lam);
            Rational lhs(0);
            for (Index n = 0; n <= 100; ++n) {
                lhs += av[static_cast<std::size_t>(n)] * xv[static_cast<std::size_t>(n)];
                Rational rhs(0);
                for (Index k = 0; k < n; ++k)
                    rhs += b.s1<Rational>(k) * y[static_cast<std::size_t>(k)];
                rhs += b.s2<Rational>(n) * y[static_cast<std::size_t>(n)];
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("termwise dual accepts fast decay and rejects constants") {
    ExponentSeq one(SeqSpec::closed_form("1"), 1.0);
    DualReport good = alpha_dual_check(SeqSpec::closed_form("1/(n+1)^2"), *kLinear, one, 2000);
    CHECK(good.combined.tag == VerdictTag::ConvergentNumeric);
    CHECK(good.which == "alpha");
    CHECK(good.part_k1.name == "k1");

    DualReport bad = alpha_dual_check(SeqSpec::closed_form("1"), *kLinear, one, 2000);
    CHECK(bad.combined.tag == VerdictTag::DivergentNumeric);
}

TEST_CASE("summing duals accept decay and label their flavor") {
    ExponentSeq one(SeqSpec::closed_form("1"), 1.0);
    DualReport beta = beta_gamma_dual_check(SeqSpec::closed_form("1/(n+1)^3"), *kLinear, one,
                                            2000, "beta");
    CHECK(beta.combined.tag == VerdictTag::ConvergentNumeric);
    CHECK(beta.which == "beta");

    DualReport gamma = beta_gamma_dual_check(SeqSpec::closed_form("1/(n+1)^3"), *kLinear, one,
                                             2000, "gamma");
    CHECK(gamma.combined.tag == beta.combined.tag);

    DualReport grow = beta_gamma_dual_check(SeqSpec::closed_form("1"), *kLinear, one, 2000,
                                            "beta");
    CHECK(grow.combined.tag == VerdictTag::DivergentNumeric);

    CHECK_THROWS_AS(static_cast<void>(beta_gamma_dual_check(
                        SeqSpec::closed_form("1"), *kLinear, one, 100, "delta")),
                    ValidationError);
}

TEST_CASE("exponent split routes conjugate work to the right part") {
    ExponentSeq two(SeqSpec::closed_form("2"), 2.0);
    DualReport rep = alpha_dual_check(SeqSpec::closed_form("2^-n"), *kLinear, two, 1500);
    CHECK(rep.part_k1.indices == 0);
    CHECK(rep.part_k2.indices == 1501);
    CHECK(!rep.part_k2.grid.empty());
    CHECK(rep.combined.tag == VerdictTag::ConvergentNumeric);
}

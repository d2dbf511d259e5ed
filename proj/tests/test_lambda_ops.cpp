#include <doctest.h>

#include <memory>
#include <random>

#include "seqspace/lambda_ops.hpp"

using namespace seqspace;

namespace {

SeqSpec random_rationals(std::mt19937& rng, Index N) {
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 50);
    std::vector<Rational> vals;
    vals.reserve(static_cast<std::size_t>(N) + 1);
    for (Index i = 0; i <= N; ++i) vals.emplace_back(num(rng), den(rng));
    return SeqSpec::explicit_list(std::move(vals), Tail::zero());
}

const LambdaSeq kLinear{SeqSpec::closed_form("n+1")};
const LambdaSeq kGeometric{SeqSpec::closed_form("2^n")};

}  // namespace

TEST_CASE("averaging weights turn a unit impulse into 1/(n+1)") {
    SeqSpec impulse = SeqSpec::explicit_list({Rational(1)}, Tail::zero());
    std::vector<Rational> y = lambda_transform<Rational>(kLinear, impulse, 20);
    for (Index n = 0; n <= 20; ++n)
        CHECK(y[static_cast<std::size_t>(n)] == Rational(1, n + 1));
}

TEST_CASE("transform rows sum to one") {
    // constant sequences are fixed points: the weights telescope
    SeqSpec ones = SeqSpec::closed_form("1");
    for (const LambdaSeq* lam : {&kLinear, &kGeometric}) {
        std::vector<Rational> y = lambda_transform<Rational>(*lam, ones, 64);
        for (const Rational& v : y) CHECK(v == Rational(1));
    }
}

TEST_CASE("incremental transforms match the quadratic direct forms") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        SeqSpec x = random_rationals(rng, 80);
        for (const LambdaSeq* lam : {&kLinear, &kGeometric}) {
            CHECK(lambda_transform<Rational>(*lam, x, 80) ==
                  lambda_transform_direct<Rational>(*lam, x, 80));
            CHECK(s_operator<Rational>(*lam, x, 80) == s_operator_direct<Rational>(*lam, x, 80));
        }
    }
}

TEST_CASE("inverse undoes the transform and vice versa") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        SeqSpec x = random_rationals(rng, 60);
        for (const LambdaSeq* lam : {&kLinear, &kGeometric}) {
            std::vector<Rational> y = lambda_transform<Rational>(*lam, x, 60);
            SeqSpec yspec = SeqSpec::explicit_list(y, Tail::zero());
            CHECK(inverse_transform<Rational>(*lam, yspec, 60) == x.values_exact(60));

            std::vector<Rational> back = inverse_transform<Rational>(*lam, x, 60);
            SeqSpec backspec = SeqSpec::explicit_list(back, Tail::zero());
            CHECK(lambda_transform<Rational>(*lam, backspec, 60) == x.values_exact(60));
        }
    }
}

TEST_CASE("companion operator is the identity minus the transform") {
    std::mt19937 rng(99);
    SeqSpec x = random_rationals(rng, 100);
    for (const LambdaSeq* lam : {&kLinear, &kGeometric}) {
        std::vector<Rational> s = s_operator<Rational>(*lam, x, 100);
        std::vector<Rational> y = lambda_transform<Rational>(*lam, x, 100);
        std::vector<Rational> xv = x.values_exact(100);
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == xv[i] - y[i]);
    }
}

TEST_CASE("derived specs expose transforms as reusable sequences") {
    auto lam = std::make_shared<const LambdaSeq>(SeqSpec::closed_form("n+1"));
    auto x = std::make_shared<const SeqSpec>(SeqSpec::explicit_list({Rational(1)}, Tail::zero()));
    SeqSpec y = derived_lambda_transform(lam, x);
    CHECK(y.value_exact(4) == Rational(1, 5));
    CHECK(y.values_exact(9) == lambda_transform<Rational>(*lam, *x, 9));

    auto yspec = std::make_shared<const SeqSpec>(y);
    SeqSpec back = derived_inverse_transform(lam, yspec);
    CHECK(back.values_exact(9) == x->values_exact(9));

    SeqSpec s = derived_s_operator(lam, x);
    CHECK(s.value_exact(0) == Rational(0));        // x_0 - y_0
    CHECK(s.value_exact(4) == -Rational(1, 5));    // x_4 - y_4
}

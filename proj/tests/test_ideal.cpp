#include <catch2/catch_amalgamated.hpp>

#include "tspread/borel.hpp"
#include "tspread/ideal.hpp"
#include "tspread/sweep.hpp"

using namespace tspread;

namespace {

GeneratorSet set_of(std::initializer_list<const char*> texts) {
    std::vector<Monomial> ms;
    for (const char* s : texts) ms.push_back(Monomial::parse(s));
    return GeneratorSet(std::move(ms));
}

} // namespace

TEST_CASE("power generators are the distinct k-fold products") {
    auto G = set_of({"x1*x2", "x1*x3"});
    auto G2 = power_gens(G, 2);
    REQUIRE(G2 == set_of({"x1^2*x2^2", "x1^2*x2*x3", "x1^2*x3^2"}));
    REQUIRE(power_gens(G, 1) == G);
    REQUIRE(power_gens(set_of({"x1*x2", "x1*x3", "x1*x4"}), 2).size() == 6);
    REQUIRE(power_gens(G, 3).degree() == 6);
    REQUIRE_THROWS_AS(power_gens(G, 0), std::invalid_argument);
}

TEST_CASE("mu counts minimal generators") {
    REQUIRE(mu(borel_gens(SpreadWord({3, 5}, 2))) == 6);
    REQUIRE(mu(set_of({"x4*x9"})) == 1);
    for (int i = 1; i <= 5; ++i)
        REQUIRE(mu(borel_gens(SpreadWord({i}, 3))) == i);
}

TEST_CASE("analytic spread is the exact exponent-matrix rank") {
    REQUIRE(analytic_spread(set_of({"x1*x3"})) == 1);
    REQUIRE(analytic_spread(set_of({"x1*x2", "x1*x3"})) == 2);
    REQUIRE(analytic_spread(borel_gens(SpreadWord({3, 4}, 1))) == 4);
    // triangle rows (1,1,0),(0,1,1),(1,0,1): rank 3 over Q despite rank 2 mod 2
    REQUIRE(analytic_spread(set_of({"x1*x2", "x2*x3", "x1*x3"})) == 3);
    REQUIRE(analytic_spread(set_of({"x1^2", "x1*x2", "x2^2"})) == 2);
}

TEST_CASE("rank bounds hold on borel sets") {
    for (int t = 1; t <= 2; ++t)
        for (const auto& u : enumerate_spread_words(3, t, 2 * t + 4)) {
            auto G = borel_gens(u);
            int ell = analytic_spread(G);
            REQUIRE(ell >= 1);
            REQUIRE(ell <= std::min<long long>(mu(G), G.max_index()));
        }
}

TEST_CASE("freiman bound") {
    REQUIRE(freiman_bound(1, 1) == 1);
    REQUIRE(freiman_bound(2, 2) == 3);
    REQUIRE(freiman_bound(6, 4) == 18);
    REQUIRE_THROWS_AS(freiman_bound(2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(freiman_bound(0, 0), std::invalid_argument);
}

TEST_CASE("direct freiman verdict") {
    auto fr = is_freiman_direct(set_of({"x1*x2", "x1*x3"}));
    REQUIRE(fr == FreimanVerdict{2, 2, 3, 3, true});

    auto single = is_freiman_direct(set_of({"x2*x4"}));
    REQUIRE(single == FreimanVerdict{1, 1, 1, 1, true});

    auto k4 = is_freiman_direct(borel_gens(SpreadWord({3, 4}, 1)));
    REQUIRE(k4.mu == 6);
    REQUIRE(k4.ell == 4);
    REQUIRE(k4.bound == 18);
    REQUIRE(k4.mu2 == 19); // all pairwise products of the six degree-2 words
    REQUIRE(k4.mu2 > k4.bound);
    REQUIRE_FALSE(k4.is_freiman);
}

TEST_CASE("predicted power counts") {
    for (long long m = 1; m <= 9; ++m)
        for (long long ell = 1; ell <= m; ++ell) {
            REQUIRE(predicted_mu_power(m, ell, 1) == m);
            // At k = 2 the formula collapses to the Freiman bound.
            REQUIRE(predicted_mu_power(m, ell, 2) == freiman_bound(m, ell));
        }
    REQUIRE(predicted_mu_power(2, 2, 2) == 3);
    REQUIRE(predicted_mu_power(3, 3, 3) == 10);
    REQUIRE(predicted_mu_power(3, 3, 3) ==
            static_cast<long long>(power_gens(set_of({"x1*x2", "x1*x3", "x1*x4"}), 3).size()));
    REQUIRE_THROWS_AS(predicted_mu_power(2, 3, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(predicted_mu_power(3, 2, 0), std::invalid_argument);
}

TEST_CASE("power counts are nondecreasing in k") {
    auto G = borel_gens(SpreadWord({2, 5}, 2));
    long long prev = 0;
    for (int k = 1; k <= 4; ++k) {
        long long cur = power_gens(G, k).size();
        REQUIRE(cur >= prev);
        prev = cur;
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "tspread/classify.hpp"
#include "tspread/ideal.hpp"
#include "tspread/sweep.hpp"

using namespace tspread;

TEST_CASE("degree one is always Freiman") {
    auto r = classify_closed_form(SpreadWord({5}, 3));
    REQUIRE(r == ClassificationResult{true, "d=1", 0});
}

TEST_CASE("degree-2 branches") {
    REQUIRE(classify_closed_form(SpreadWord({3, 4}, 1)) ==
            ClassificationResult{false, "deg2-a", 0});
    REQUIRE(classify_closed_form(SpreadWord({2, 7}, 1)) ==
            ClassificationResult{true, "deg2-a", 0});
    REQUIRE(classify_closed_form(SpreadWord({3, 5}, 2)) ==
            ClassificationResult{true, "deg2-b", 0});
    REQUIRE(classify_closed_form(SpreadWord({3, 6}, 2)) ==
            ClassificationResult{false, "deg2-b", 0});
    REQUIRE(classify_closed_form(SpreadWord({4, 7}, 3)) ==
            ClassificationResult{false, "deg2-b", 0});
}

TEST_CASE("minimal-prefix words are Freiman for any last index") {
    REQUIRE(classify_closed_form(SpreadWord({1, 2, 4}, 1)) ==
            ClassificationResult{true, "lemma-simple", 0});
    REQUIRE(classify_closed_form(SpreadWord({1, 3, 5}, 2)) ==
            ClassificationResult{true, "lemma-simple", 0});
    REQUIRE(classify_closed_form(SpreadWord({1, 3, 11}, 2)) ==
            ClassificationResult{true, "lemma-simple", 0});
}

TEST_CASE("the two i_1 = 2 families") {
    REQUIRE(classify_closed_form(SpreadWord({2, 4, 6}, 2)) ==
            ClassificationResult{true, "special1", 0});
    REQUIRE(classify_closed_form(SpreadWord({2, 3, 4, 5}, 1)) ==
            ClassificationResult{true, "special1", 0});
    REQUIRE(classify_closed_form(SpreadWord({2, 4, 7}, 2)) ==
            ClassificationResult{true, "special2", 0});
    REQUIRE(classify_closed_form(SpreadWord({2, 3, 5}, 1)) ==
            ClassificationResult{true, "special2", 0});
    REQUIRE(classify_closed_form(SpreadWord({2, 4, 8}, 2)) ==
            ClassificationResult{false, "end-1", 0});
    REQUIRE(classify_closed_form(SpreadWord({2, 5, 7}, 2)) ==
            ClassificationResult{false, "end-1", 0});
}

TEST_CASE("i_1 >= 3 never is") {
    REQUIRE(classify_closed_form(SpreadWord({3, 5, 9}, 2)) ==
            ClassificationResult{false, "end-2", 0});
    REQUIRE(classify_closed_form(SpreadWord({4, 5, 6, 7}, 1)) ==
            ClassificationResult{false, "end-2", 0});
}

TEST_CASE("i_1 = 1 words matching the closed-form patterns") {
    REQUIRE(classify_closed_form(SpreadWord({1, 3, 7}, 1)) ==
            ClassificationResult{true, "start-1-i", 1});
    REQUIRE(classify_closed_form(SpreadWord({1, 3, 4, 6}, 1)) ==
            ClassificationResult{true, "start-1-ii", 1});
    REQUIRE(classify_closed_form(SpreadWord({1, 4, 9}, 2)) ==
            ClassificationResult{true, "start-2-i", 1});
    REQUIRE(classify_closed_form(SpreadWord({1, 5, 7}, 2)) ==
            ClassificationResult{true, "start-2-i", 1}); // i_2 = t+3, i_3 = 2t+3
    REQUIRE(classify_closed_form(SpreadWord({1, 4, 6, 9}, 2)) ==
            ClassificationResult{true, "start-2-ii", 1});
    REQUIRE(classify_closed_form(SpreadWord({1, 2, 4, 5, 7}, 1)) ==
            ClassificationResult{true, "start-1-ii", 2});
}

TEST_CASE("reduction decides everything else with i_1 = 1") {
    REQUIRE(classify_closed_form(SpreadWord({1, 4, 8}, 1)) ==
            ClassificationResult{false, "phi-reduction", 1});
    REQUIRE(classify_closed_form(SpreadWord({1, 5, 9}, 2)) ==
            ClassificationResult{false, "phi-reduction", 1});
    REQUIRE(classify_closed_form(SpreadWord({1, 2, 4, 6, 8}, 1)) ==
            ClassificationResult{false, "phi-reduction", 2});
}

TEST_CASE("classifier rejects t = 0") {
    REQUIRE_THROWS_AS(classify_closed_form(SpreadWord({1, 2}, 0)), std::invalid_argument);
    REQUIRE_THROWS_AS(classify_intro_variant(SpreadWord({1, 2}, 0)), std::invalid_argument);
}

TEST_CASE("literal six-case summary") {
    // Its degree-2 case has no t = 1 restriction; that single divergence from
    // ground truth is measured, not patched.
    auto erratum = classify_intro_variant(SpreadWord({3, 4}, 1));
    REQUIRE(erratum.is_freiman);
    REQUIRE(erratum.case_label == "intro-2");
    REQUIRE_FALSE(classify_closed_form(SpreadWord({3, 4}, 1)).is_freiman);

    REQUIRE(classify_intro_variant(SpreadWord({5}, 3)).is_freiman);
    REQUIRE_FALSE(classify_intro_variant(SpreadWord({3, 5, 9}, 2)).is_freiman);
    REQUIRE(classify_intro_variant(SpreadWord({3, 5}, 2)).is_freiman);
    REQUIRE(classify_intro_variant(SpreadWord({1, 3, 7}, 1)).is_freiman);
    REQUIRE(classify_intro_variant(SpreadWord({2, 4, 6}, 2)).is_freiman);
    REQUIRE_FALSE(classify_intro_variant(SpreadWord({2, 4, 8}, 2)).is_freiman);
}

TEST_CASE("closed form agrees with brute force on a small grid") {
    for (int t = 1; t <= 2; ++t)
        for (int d = 1; d <= 4; ++d)
            for (const auto& u : enumerate_spread_words(d, t, (d - 1) * t + 5)) {
                INFO("u = " << u);
                auto closed = classify_closed_form(u);
                auto direct = is_freiman_direct(borel_gens(u));
                REQUIRE(closed.is_freiman == direct.is_freiman);
            }
}

TEST_CASE("reduction preserves the verdict") {
    for (int t = 1; t <= 3; ++t)
        for (const auto& u : enumerate_spread_words(4, t, 3 * t + 5)) {
            if (u.indices().front() != 1) continue;
            auto reduced = phi_shift(u);
            if (reduced.degree() < 3 || reduced.indices().front() != 1) continue;
            REQUIRE(classify_closed_form(u).is_freiman ==
                    classify_closed_form(reduced).is_freiman);
        }
}

TEST_CASE("reduction transports the brute-force verdict too") {
    for (int t = 1; t <= 2; ++t)
        for (int d = 2; d <= 4; ++d)
            for (const auto& u : enumerate_spread_words(d, t, (d - 1) * t + 4)) {
                if (u.indices().front() != 1) continue;
                INFO("u = " << u);
                REQUIRE(is_freiman_direct(borel_gens(u)).is_freiman ==
                        is_freiman_direct(borel_gens(phi_shift(u))).is_freiman);
            }
}

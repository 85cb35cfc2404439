#include <doctest.h>

#include "helpers.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;
using testutil::c5_space;
using testutil::random_coloring;
using testutil::random_metric;

TEST_CASE("brute_max_monochrome fixed values") {
    FiniteMetricSpace w = window_space(9);
    ScaleMap parity;
    parity.scale = scale_of(w);
    for (const Rat& r : parity.scale)
        parity.colors.push_back((std::uint8_t)(r.num() % 2));
    MonochromeResult m =
        oracle::brute_max_monochrome(w, induce_coloring(w, parity));
    CHECK(m.subset.size() == 5);
    CHECK(m.color == 0);

    PairColoring zero(w.size(), 0);
    CHECK(oracle::brute_max_monochrome(w, zero).subset.size() == 9);

    FiniteMetricSpace c5 = c5_space();
    PairColoring chi =
        induce_coloring(c5, ScaleMap{Scale{Rat(1), Rat(2)}, {0, 1}});
    CHECK(oracle::brute_max_monochrome(c5, chi).subset.size() == 2);

    CHECK_THROWS_AS(
        oracle::brute_max_monochrome(window_space(21), PairColoring(21, 0)),
        input_error);
}

TEST_CASE("oracle and search agree with identical tie-breaking") {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 60; ++trial) {
        FiniteMetricSpace s = random_metric(rng, 4 + (int)(rng() % 11));
        PairColoring chi = random_coloring(rng, s.size());
        MonochromeResult a = max_monochrome(s, chi);
        MonochromeResult b = oracle::brute_max_monochrome(s, chi);
        CHECK(a.subset == b.subset);
        CHECK(a.color == b.color);
    }
}

TEST_CASE("equidistance guarantee at the classical values") {
    CHECK(oracle::equidistance_guarantee(6, 3));
    CHECK(!oracle::equidistance_guarantee(5, 3));
    CHECK(oracle::equidistance_guarantee(2, 2));
    CHECK_THROWS_AS(oracle::equidistance_guarantee(7, 3), input_error);
}

TEST_CASE("equidistance guarantee is monotone in n") {
    for (int k = 2; k <= 3; ++k) {
        bool seen_true = false;
        for (int n = 2; n <= 6; ++n) {
            bool g = oracle::equidistance_guarantee(n, k);
            if (seen_true) CHECK(g);
            seen_true |= g;
        }
    }
}

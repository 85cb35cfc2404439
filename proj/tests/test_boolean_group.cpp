#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ramsey/boolean_group.hpp"

using namespace ramsey;
using testutil::random_coloring;

TEST_CASE("b_distance") {
    CHECK(b_distance(b_parse("0110"), b_parse("0100"), 4) == 3);
    CHECK(b_distance(b_parse("0110"), b_parse("0110"), 4) == 0);
    CHECK(b_distance(b_parse("1000"), b_parse("0010"), 4) == 3); // e0 vs e2
    CHECK(b_distance(0, 1, 1) == 1);
    CHECK_THROWS_AS(b_distance(4, 0, 2), input_error);
    CHECK_THROWS_AS(b_parse("012"), input_error);
}

TEST_CASE("b_space shapes") {
    FiniteMetricSpace s1 = b_space(1);
    CHECK(s1.size() == 2);
    CHECK(s1.dist(0, 1) == Rat(1));

    FiniteMetricSpace s2 = b_space(2);
    CHECK(s2.size() == 4);
    CHECK(s2.index_of("00") == 0);
    CHECK(s2.dist(s2.index_of("00"), s2.index_of("10")) == Rat(1));
    CHECK(s2.dist(s2.index_of("00"), s2.index_of("01")) == Rat(2));
    CHECK(s2.dist(s2.index_of("00"), s2.index_of("11")) == Rat(2));

    CHECK(scale_of(b_space(3)) == Scale{Rat(1), Rat(2), Rat(3)});
    CHECK_THROWS_AS(b_space(0), input_error);
    CHECK_THROWS_AS(b_space(11), input_error);
}

TEST_CASE("b_space is ultrametric, exhaustively to L=6") {
    for (int len = 1; len <= 6; ++len) {
        FiniteMetricSpace s = b_space(len);
        std::vector<std::vector<Rat>> d(s.size(), std::vector<Rat>(s.size()));
        for (int i = 0; i < s.size(); ++i)
            for (int j = 0; j < s.size(); ++j) d[i][j] = s.dist(i, j);
        CHECK(classify_matrix(d).cls == MetricClass::ultrametric);
    }
}

TEST_CASE("b_space strong triangle holds on sampled triples beyond L=6") {
    std::mt19937_64 rng(99);
    for (int len : {8, 10}) {
        FiniteMetricSpace s = b_space(len);
        std::uniform_int_distribution<int> pick(0, s.size() - 1);
        for (int trial = 0; trial < 20000; ++trial) {
            int i = pick(rng), j = pick(rng), k = pick(rng);
            if (i == j || j == k || i == k) continue;
            CHECK(s.dist(i, j) <= std::max(s.dist(i, k), s.dist(k, j)));
        }
    }
}

TEST_CASE("b_profile_tree materializes point-for-point to b_space") {
    for (int len = 1; len <= 5; ++len) {
        FiniteMetricSpace direct = b_space(len);
        Materialized m = materialize(b_profile_tree(len), 1 << len);
        REQUIRE(m.space.size() == direct.size());
        for (int i = 0; i < direct.size(); ++i)
            for (int j = i + 1; j < direct.size(); ++j)
                CHECK(m.space.dist(i, j) == direct.dist(i, j));
    }
}

TEST_CASE("scale-map colorings are PS") {
    FiniteMetricSpace s = b_space(3);
    ScaleMap f{Scale{Rat(1), Rat(2), Rat(3)}, {1, 0, 1}};
    PairColoring chi = induce_coloring(s, f);
    CHECK(!is_ps_coloring(3, chi).has_value());
    CHECK(!is_invariant_coloring(3, chi).has_value());
}

TEST_CASE("weight parity of the sum is PS but not isometric") {
    const int len = 3, n = 1 << len;
    FiniteMetricSpace s = b_space(len);
    PairColoring chi(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            chi.set(i, j, (std::uint8_t)(__builtin_popcount(i ^ j) % 2));
    CHECK(!is_ps_coloring(len, chi).has_value());
    CHECK(!is_invariant_coloring(len, chi).has_value());
    CHECK(std::holds_alternative<IsometricViolation>(
        recognize_isometric(s, chi)));
}

TEST_CASE("violations carry usable witnesses") {
    const int len = 2, n = 4;
    // color one pair of a sum class differently from another
    PairColoring chi(n, 0);
    chi.set(0, 3, 1); // sum 11; pair (1,2) has the same sum but color 0
    auto ps = is_ps_coloring(len, chi);
    REQUIRE(ps.has_value());
    CHECK((ps->pair1[0] ^ ps->pair1[1]) == (int)ps->sum);
    CHECK((ps->pair2[0] ^ ps->pair2[1]) == (int)ps->sum);
    auto inv = is_invariant_coloring(len, chi);
    REQUIRE(inv.has_value());
    int ti = inv->pair[0] ^ (int)inv->g, tj = inv->pair[1] ^ (int)inv->g;
    CHECK(chi.at(inv->pair[0], inv->pair[1]) != chi.at(ti, tj));
}

TEST_CASE("PS iff invariant, exhaustively at L=2") {
    const int len = 2, n = 4;
    for (std::uint32_t bits = 0; bits < (1u << 6); ++bits) {
        PairColoring chi(n);
        int id = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) chi.set(i, j, (bits >> id++) & 1);
        CHECK(is_ps_coloring(len, chi).has_value() ==
              is_invariant_coloring(len, chi).has_value());
    }
}

TEST_CASE("PS iff invariant, sampled at L=3 and L=4") {
    std::mt19937_64 rng(616);
    for (int len : {3, 4}) {
        int n = 1 << len;
        for (int trial = 0; trial < 300; ++trial) {
            // half the trials bias toward PS colorings by coloring sums
            PairColoring chi(n);
            if (trial % 2 == 0) {
                std::vector<std::uint8_t> sum_color(1u << len);
                for (auto& c : sum_color) c = (std::uint8_t)(rng() % 2);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        chi.set(i, j, sum_color[(std::size_t)(i ^ j)]);
            } else {
                chi = random_coloring(rng, n);
            }
            CHECK(is_ps_coloring(len, chi).has_value() ==
                  is_invariant_coloring(len, chi).has_value());
        }
    }
}

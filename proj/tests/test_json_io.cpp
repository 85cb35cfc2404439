#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ramsey/json_io.hpp"

using namespace ramsey;
using testutil::random_coloring;
using testutil::random_tree;

TEST_CASE("rational JSON forms") {
    CHECK(rat_from_json(json(3)) == Rat(3));
    CHECK(rat_from_json(json("1/2")) == Rat(1, 2));
    CHECK(rat_to_json(Rat(5)) == json(5));
    CHECK(rat_to_json(Rat(1, 2)) == json("1/2"));
    CHECK_THROWS_AS(rat_from_json(json(1.5)), input_error);
}

TEST_CASE("space round trip with mixed rational entries") {
    json j = json::parse(R"({
      "points": ["a", "b", "c"],
      "dist": [[0, "1/2", "1/2"], ["1/2", 0, "1/2"], ["1/2", "1/2", 0]]
    })");
    FiniteMetricSpace s = space_from_json(j);
    CHECK(s.size() == 3);
    CHECK(s.dist(0, 1) == Rat(1, 2));
    json out = space_to_json(s);
    CHECK(out.at("classification") == "ultrametric");
    FiniteMetricSpace again = space_from_json(out);
    CHECK(again.dist(0, 2) == s.dist(0, 2));
}

TEST_CASE("space JSON errors map to input_error") {
    CHECK_THROWS_AS(space_from_json(json::parse(R"({"points": []})")),
                    input_error);
    CHECK_THROWS_AS(
        space_from_json(json::parse(R"({"dist": [[0, 1], [1]]})")),
        input_error);
    CHECK_THROWS_AS(
        space_from_json(json::parse(R"({"dist": [[0, -1], [-1, 0]]})")),
        input_error);
}

TEST_CASE("pair coloring totality is enforced") {
    json full = json::array({{0, 1, 1}, {0, 2, 0}, {1, 2, 1}});
    PairColoring chi = pair_coloring_from_json(full, 3);
    CHECK(chi.at(0, 1) == 1);
    json partial = json::array({{0, 1, 1}});
    CHECK_THROWS_AS(pair_coloring_from_json(partial, 3), input_error);
    json dup = json::array({{0, 1, 1}, {1, 0, 0}, {0, 2, 0}, {1, 2, 1}});
    CHECK_THROWS_AS(pair_coloring_from_json(dup, 3), input_error);
    PairColoring back =
        pair_coloring_from_json(pair_coloring_to_json(chi), 3);
    CHECK(back.at(1, 2) == chi.at(1, 2));
}

TEST_CASE("tree DSL round trip") {
    json j = json::parse(R"({
      "levels": [2, 1],
      "root": {"groups": [
        {"shape": {"leaf": "omega"}, "mult": "omega"},
        {"shape": {"leaf": 3}, "mult": 2},
        {"shape": {"leaf": 1}, "mult": "unbounded"}
      ]}
    })");
    ProfileTree t = tree_from_json(j);
    CHECK(t.levels == std::vector<Rat>{Rat(2), Rat(1)});
    CHECK(tree_from_json(tree_to_json(t)).root.groups.size() == 3);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        ProfileTree a = random_tree(rng);
        ProfileTree b = tree_from_json(tree_to_json(a));
        CHECK(tree_to_json(b) == tree_to_json(a));
        // same samples from both presentations
        Materialized ma = materialize(a, 10), mb = materialize(b, 10);
        REQUIRE(ma.space.size() == mb.space.size());
        for (int i = 0; i < ma.space.size(); ++i)
            for (int k = i + 1; k < ma.space.size(); ++k)
                CHECK(ma.space.dist(i, k) == mb.space.dist(i, k));
    }
}

TEST_CASE("tree DSL rejects malformed inputs") {
    CHECK_THROWS_AS(tree_from_json(json::parse(R"({"levels": [1]})")),
                    input_error);
    CHECK_THROWS_AS(
        tree_from_json(json::parse(
            R"({"levels": [1, 2], "root": {"groups": [{"shape": {"leaf": 1}, "mult": 1}]}})")),
        input_error);
    CHECK_THROWS_AS(
        tree_from_json(json::parse(
            R"({"levels": [1], "root": {"groups": [{"shape": {"leaf": 1}, "mult": 0}]}})")),
        input_error);
    CHECK_THROWS_AS(
        tree_from_json(json::parse(
            R"({"levels": [2,1], "root": {"groups": [{"shape": {"groups": [{"shape": {"leaf": 1}, "mult": 1}]}, "mult": "unbounded"}]}})")),
        input_error);
}

TEST_CASE("cells resolve against point identifiers") {
    FiniteMetricSpace s = window_space(6);
    json j = json::parse(R"({"cells": [["1", "2"], [5, 6]]})");
    auto cells = cells_from_json(j, s);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0] == std::vector<int>{0, 1});
    CHECK(cells[1] == std::vector<int>{4, 5});
    CHECK(cells_to_json(cells, s)[1][0] == "5");
    CHECK_THROWS_AS(
        cells_from_json(json::parse(R"({"cells": [["7"]]})"), s), input_error);
}

#include <doctest.h>

#include "ramsey/rational.hpp"

using ramsey::Rat;

TEST_CASE("normalization and basic arithmetic") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
}

TEST_CASE("ordering is exact") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(7, 2) > Rat(3));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(1000000007, 3) < Rat(1000000008, 3));
}

TEST_CASE("parse and print round trip") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-3/4") == Rat(-3, 4));
    CHECK(Rat::parse("17") == Rat(17));
    CHECK(Rat(3, 4).str() == "3/4");
    CHECK(Rat(5).str() == "5");
    CHECK(Rat::parse(Rat(22, 7).str()) == Rat(22, 7));
}

TEST_CASE("bad input rejected") {
    CHECK_THROWS_AS(Rat(1, 0), ramsey::input_error);
    CHECK_THROWS_AS(Rat::parse(""), ramsey::input_error);
    CHECK_THROWS_AS(Rat::parse("1/"), ramsey::input_error);
    CHECK_THROWS_AS(Rat::parse("a/b"), ramsey::input_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), ramsey::input_error);
}

TEST_CASE("intermediate products do not overflow") {
    Rat big(3000000000LL, 7);
    Rat other(2999999999LL, 7);
    CHECK(other < big);
    CHECK(big - other == Rat(1, 7));
}

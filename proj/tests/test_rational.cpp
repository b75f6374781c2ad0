#include <doctest.h>

#include "girylab/rational.hpp"

using girylab::Rat;

TEST_CASE("normalization to lowest terms with positive denominator") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, -4) == Rat(1, 2));
    CHECK(Rat(2, -4) == Rat(-1, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(0, -3).den() == 1);
}

TEST_CASE("arithmetic") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 3) / Rat(2, 3) == Rat(1, 2));
    CHECK(-Rat(1, 2) == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("comparison") {
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(2, 4) <= Rat(1, 2));
    CHECK(Rat(7, 3) > Rat(2));
}

TEST_CASE("string forms") {
    CHECK(Rat(1, 2).str() == "1/2");
    CHECK(Rat(3).str() == "3");
    CHECK(Rat(3).wire() == "3/1");
    CHECK(Rat::parse("2/4") == Rat(1, 2));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK_THROWS_AS(Rat::parse("x/y"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rat big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + Rat(1, 2), std::overflow_error);
}

TEST_CASE("predicates") {
    CHECK(Rat(0).is_zero());
    CHECK(Rat(5, 5).is_one());
    CHECK_FALSE(Rat(1, 2).is_one());
}

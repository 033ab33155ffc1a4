#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fillings/slope.hpp"

using namespace fl;

TEST_SUITE("slope") {

TEST_CASE("normalize") {
    CHECK(slope_normalize(2, -6) == Slope{-1, 3});
    CHECK(slope_normalize(-3, 0) == Slope{1, 0});
    CHECK(slope_normalize(0, 5) == Slope{0, 1});
    CHECK_THROWS_AS(slope_normalize(0, 0), std::invalid_argument);
    CHECK(parse_slope("1/-3") == parse_slope("-1/3"));
    CHECK(parse_slope("7") == Slope{7, 1});
    CHECK(parse_slope("1/0").is_inf());
    CHECK_THROWS(parse_slope("1/x"));
    CHECK(to_string(slope(3)) == "3/1");
    CHECK(short_string(slope(3)) == "3");
}

TEST_CASE("distance") {
    CHECK(slope_distance(slope(1, 0), slope(-1, 3)) == 3);
    CHECK(slope_distance(slope(5, 7), slope(5, 7)) == 0);
    for (i64 a = -20; a <= 20; ++a) CHECK(slope_distance(slope(a), slope(1, 0)) == 1);
}

TEST_CASE("distance properties") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> num(-50, 50), den(0, 50), k(1, 6);
    for (int i = 0; i < 3000; ++i) {
        i64 p1 = num(rng), q1 = den(rng), p2 = num(rng), q2 = den(rng);
        if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
        Slope a = slope_normalize(p1, q1), b = slope_normalize(p2, q2);
        CHECK(slope_distance(a, b) == slope_distance(b, a));
        CHECK((slope_distance(a, b) == 0) == (a == b));
        // scaled representatives normalize to the same thing
        i64 s = k(rng);
        CHECK(slope_distance(slope_normalize(s * p1, s * q1), slope_normalize(-p2, -q2)) == slope_distance(a, b));
    }
}

TEST_CASE("twists") {
    CHECK(twists_to_fraction({3}) == slope(3));
    CHECK(twists_to_fraction({3, 3}) == slope(10, 3));
    CHECK(twists_to_fraction({2, -3}) == slope(-5, 2));
    CHECK(twists_to_fraction({}) == slope(0));
    CHECK(fraction_to_twists(slope(3)) == TwistSequence{3});
    CHECK(fraction_to_twists(slope(-1, 3)) == TwistSequence{-3, 0});
    CHECK(fraction_to_twists(slope(10, 3)) == TwistSequence{3, 3});
    CHECK(twists_to_fraction(fraction_to_twists(slope(1, 0))) == slope(1, 0));
}

TEST_CASE("round trip, 10000 samples") {
    std::mt19937_64 rng(20261015);
    std::uniform_int_distribution<i64> num(-1000000, 1000000), den(1, 1000000);
    int done = 0;
    while (done < 10000) {
        i64 p = num(rng), q = den(rng);
        if (std::gcd(p, q) != 1) continue;
        Slope s{p, q};
        auto t = fraction_to_twists(s);
        REQUIRE(twists_to_fraction(t) == s);
        for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(std::abs(t[i]) >= 2);
        ++done;
    }
}

TEST_CASE("projective ops") {
    CHECK(inv(slope(0)) == slope(1, 0));
    CHECK(rot(slope(3)) == slope(-1, 3));
    CHECK(add(slope(1, 0), 5) == slope(1, 0));
    CHECK(add(slope(1, 2), slope(1, 3)) == slope(5, 6));
    CHECK_THROWS(add(slope(1, 0), slope(1, 0)));
}

}

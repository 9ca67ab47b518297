#include "crged/errors.hpp"
#include "crged/rational.hpp"

#include <doctest.h>

using namespace crged;

TEST_CASE("parse and print rationals") {
    CHECK(to_string(parse_rational("2/4")) == "1/2");
    CHECK(to_string(parse_rational("3")) == "3/1");
    CHECK(to_string(parse_rational("0")) == "0/1");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(parse_rational("1/3") == make_rational(1, 3));
}

TEST_CASE("malformed rationals are parse errors") {
    for (const char* bad : {"", "1/", "/2", "1/0", "a/b", "1.5", "1//2", " 1/2", "1/2 "})
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
}

TEST_CASE("round trip print -> parse -> print") {
    for (long a = -7; a <= 7; ++a)
        for (long b = 1; b <= 9; ++b) {
            const auto s = to_string(make_rational(a, b));
            CHECK(to_string(parse_rational(s)) == s);
        }
}

TEST_CASE("unit interval and decimals") {
    CHECK(in_unit_interval(make_rational(0)));
    CHECK(in_unit_interval(make_rational(1)));
    CHECK_FALSE(in_unit_interval(make_rational(5, 3)));
    CHECK_FALSE(in_unit_interval(make_rational(-1, 3)));
    CHECK(to_decimal_string(make_rational(1, 3)) == "0.333333");
    CHECK(to_double(make_rational(1, 4)) == doctest::Approx(0.25));
}

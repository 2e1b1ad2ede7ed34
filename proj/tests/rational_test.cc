#include "doctest.h"

#include "hideseek/error.h"
#include "hideseek/rational.h"

using namespace hideseek;

TEST_SUITE("rational") {
  TEST_CASE("fraction strings are canonical") {
    CHECK(to_fraction_string(make_rational(12, 2)) == "6/1");
    CHECK(to_fraction_string(make_rational(-4, 6)) == "-2/3");
  }

  TEST_CASE("parsing") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("6/8") == make_rational(3, 4));
    CHECK(parse_rational("0.9") == make_rational(9, 10));
    CHECK(parse_rational("1e-2") == make_rational(1, 100));
    CHECK(parse_rational("-2.5") == make_rational(-5, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
  }

  TEST_CASE("decimal round trip") {
    CHECK(rational_from_double(0.9) == make_rational(9, 10));
    CHECK(rational_from_double(0.5) == make_rational(1, 2));
  }
}

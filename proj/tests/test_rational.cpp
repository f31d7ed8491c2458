#include <doctest.h>

#include "hardy/rational.hpp"

using namespace hardy;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("extended arithmetic keeps 0 * inf = 0") {
  const Extended inf = Extended::infinity();
  CHECK((inf * Extended(0)).is_zero());
  CHECK((inf + Extended(2)).is_infinite());
  CHECK(Extended(0).reciprocal().is_infinite());
  CHECK(inf.reciprocal().is_zero());
  CHECK(Extended(Rational(1, 3)) < inf);
  CHECK(to_string(inf) == "inf");
  CHECK(parse_extended("inf").is_infinite());
  CHECK(parse_extended("2/6") == Extended(Rational(1, 3)));
}

TEST_CASE("format_double prints 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(3.0) == "3");
}

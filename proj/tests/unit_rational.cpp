#include "rainbow/rational.hpp"

#include <doctest.h>

using rainbow::Rational;

TEST_CASE("rational normalization and comparison") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2 * 30 + 1, 3) == Rational(61, 3));
  CHECK(Rational(61, 3) > Rational(20));
  CHECK(Rational(61, 3) < Rational(21));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1) - Rational(2, 720) == Rational(359, 360));
  CHECK(Rational(5, 2) / Rational(5) == Rational(1, 2));
}

TEST_CASE("rational floor and ceil") {
  CHECK(Rational(7, 3).ceil_val() == 3);
  CHECK(Rational(7, 3).floor_val() == 2);
  CHECK(Rational(6, 3).ceil_val() == 2);
  CHECK(Rational(-7, 3).ceil_val() == -2);
  CHECK(Rational(-7, 3).floor_val() == -3);
  CHECK(Rational(61, 3).ceil_val() == 21);
}

TEST_CASE("rational parse and render") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-1/2") == Rational(-1, 2));
  CHECK(Rational(61, 3).str() == "61/3");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("checked factorial") {
  CHECK(rainbow::checked_factorial(0) == 1);
  CHECK(rainbow::checked_factorial(3) == 6);
  CHECK(rainbow::checked_factorial(6) == 720);
  CHECK(rainbow::checked_factorial(20) == 2432902008176640000LL);
  CHECK_THROWS_AS(rainbow::checked_factorial(21), std::overflow_error);
}

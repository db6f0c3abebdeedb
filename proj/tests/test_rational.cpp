#include "doctest.h"
#include "schwarzian/rational.hpp"

using namespace schwarzian;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
  const Rational r(2, 4);
  CHECK(r.numerator() == 1);
  CHECK(r.denominator() == 2);
  const Rational s(3, -6);
  CHECK(s.numerator() == -1);
  CHECK(s.denominator() == 2);
  CHECK(Rational(0, 5).denominator() == 1);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-3, 7).abs() == Rational(3, 7));
}

TEST_CASE("division by zero") {
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("powers and comparisons") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("string and double round trips") {
  CHECK(Rational("22/7").to_string() == "22/7");
  CHECK(Rational("-5").to_string() == "-5");
  CHECK(Rational::from_double(0.25) == Rational(1, 4));
  CHECK(Rational::from_double(-1.5) == Rational(-3, 2));
  CHECK(Rational(1, 8).to_double() == doctest::Approx(0.125));
}

}  // TEST_SUITE

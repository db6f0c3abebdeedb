#include "doctest.h"
#include "schwarzian/qseries.hpp"
#include "schwarzian/errors.hpp"
#include "schwarzian/rng.hpp"

using namespace schwarzian;

TEST_SUITE("qseries") {

TEST_CASE("geometric series inverse") {
  const QSeries one_minus_q(6, {Rational(1), Rational(-1)});
  const QSeries inv = one_minus_q.invert();
  for (int i = 0; i < 6; ++i) CHECK(inv.coeff(i) == Rational(1));
  CHECK(one_minus_q * inv == QSeries::one(6));
}

TEST_CASE("normalized derivation scales by the exponent") {
  const QSeries x(3, {Rational(1), Rational(-24), Rational(-72)});
  const QSeries dx = x.derive();
  CHECK(dx.coeff(0) == Rational(0));
  CHECK(dx.coeff(1) == Rational(-24));
  CHECK(dx.coeff(2) == Rational(-144));
  CHECK(dx.order() == 3);
}

TEST_CASE("exponential") {
  const QSeries q = QSeries::from_poly(Poly{0, 1}, 8);
  const QSeries e = q.exp();
  Rational factorial(1);
  for (int n = 0; n < 8; ++n) {
    if (n > 0) factorial *= Rational(n);
    CHECK(e.coeff(n) == Rational(1) / factorial);
  }
  CHECK_THROWS_AS(QSeries::one(4).exp(), NonNilpotentExponent);
  CHECK_THROWS_AS(q.invert(), NonUnitSeries);
}

TEST_CASE("exp(x)·exp(−x) = 1 on random instances") {
  Rng rng(5);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> coeffs{Rational(0)};
    for (int k = 1; k < 12; ++k) coeffs.emplace_back(rng.int_in(-5, 5));
    const QSeries x(12, coeffs);
    CHECK(x.exp() * (-x).exp() == QSeries::one(12));
  }
}

TEST_CASE("order bookkeeping takes the minimum") {
  const QSeries a = QSeries::one(10);
  const QSeries b = QSeries::one(6);
  CHECK((a * b).order() == 6);
  CHECK((a + b).order() == 6);
  CHECK(a.truncate(4).order() == 4);
  CHECK_THROWS(a.truncate(11));
}

TEST_CASE("valuation-aware logarithmic derivative") {
  // x = q²·(1 + q): D(x)/x = 2 + D(1+q)/(1+q) at order 4.
  const QSeries x = QSeries::from_poly(Poly{0, 0, 1, 1}, 6);
  const QSeries logd = x.log_derivative();
  CHECK(logd.order() == 4);
  const QSeries unit = QSeries::from_poly(Poly{1, 1}, 4);
  CHECK(logd == QSeries::constant(Rational(2), 4) + unit.derive() * unit.invert());
  CHECK_THROWS_AS(QSeries(4).log_derivative(), DivisionByZero);
}

}  // TEST_SUITE

#include "doctest.h"
#include "schwarzian/modular.hpp"

using namespace schwarzian;

namespace {

// Independent divisor-sum oracle (plain loop, no shortcuts).
Integer sigma_oracle(unsigned r, unsigned n) {
  Integer total = 0;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer power = 1;
    for (unsigned i = 0; i < r; ++i) power *= d;
    total += power;
  }
  return total;
}

}  // namespace

TEST_SUITE("modular forms") {

TEST_CASE("divisor power sums") {
  CHECK(sigma(1, 1) == 1);
  CHECK(sigma(1, 6) == 12);
  CHECK(sigma(3, 2) == 9);
  CHECK(sigma(5, 4) == 1 + 32 + 1024);
  for (unsigned n = 1; n <= 40; ++n)
    for (unsigned r : {1u, 3u, 5u}) CHECK(sigma(r, n) == sigma_oracle(r, n));
}

TEST_CASE("Eisenstein expansions") {
  const ModularSeries e2 = eisenstein(2, 4);
  CHECK(e2.weight == 2);
  CHECK(e2.series == QSeries(4, {Rational(1), Rational(-24), Rational(-72), Rational(-96)}));

  const ModularSeries e4 = eisenstein(4, 3);
  CHECK(e4.series == QSeries(3, {Rational(1), Rational(240), Rational(2160)}));

  const ModularSeries e6 = eisenstein(6, 2);
  CHECK(e6.series == QSeries(2, {Rational(1), Rational(-504)}));

  // Coefficients against the divisor-sum oracle at a deeper order.
  const ModularSeries deep = eisenstein(4, 32);
  for (int n = 1; n < 32; ++n)
    CHECK(deep.series.coeff(n) ==
          Rational(Integer(240) * sigma_oracle(3, static_cast<unsigned>(n)), Integer(1)));

  CHECK_THROWS_AS(eisenstein(8, 16), UnsupportedWeight);
  CHECK_THROWS(eisenstein(2, 1));
}

TEST_CASE("cusp form via product and Eisenstein routes") {
  // Independent truncation of q(1−q)²⁴(1−q²)²⁴ to order 3.
  const ModularSeries d3 = delta(3, DeltaMethod::Product);
  CHECK(d3.series == QSeries(3, {Rational(0), Rational(1), Rational(-24)}));
  CHECK(delta(3, DeltaMethod::Eisenstein).series == d3.series);

  const ModularSeries p64 = delta(64, DeltaMethod::Product);
  const ModularSeries e64 = delta(64, DeltaMethod::Eisenstein);
  CHECK(p64.series == e64.series);
  CHECK(p64.weight == 12);
  // Well-known early coefficients of the discriminant form.
  CHECK(p64.series.coeff(3) == Rational(252));
  CHECK(p64.series.coeff(4) == Rational(-1472));
  CHECK(p64.series.coeff(5) == Rational(4830));
}

TEST_CASE("Serre derivative") {
  const int n = 48;
  const ModularSeries e4 = eisenstein(4, n), e6 = eisenstein(6, n);
  const ModularSeries s4 = serre_derivative(e4);
  CHECK(s4.weight == 6);
  CHECK(s4.series == e6.series * Rational(-1, 3));
  const ModularSeries s6 = serre_derivative(e6);
  CHECK(s6.weight == 8);
  CHECK(s6.series == e4.series * e4.series * Rational(-1, 2));
  const ModularSeries sd = serre_derivative(delta(n, DeltaMethod::Eisenstein));
  CHECK(sd.weight == 14);
  CHECK(sd.series.is_zero());
}

TEST_CASE("Ramanujan identities") {
  // Order-q¹ coefficient of E2′ against (E2² − E4)/12 by hand:
  // −24 versus (−48 − 240)/12.
  const QSeries e2 = eisenstein(2, 8).series;
  const QSeries e4 = eisenstein(4, 8).series;
  CHECK(e2.derive().coeff(1) == Rational(-24));
  CHECK(((e2 * e2 - e4) * Rational(1, 12)).coeff(1) == Rational(-24));

  for (const auto& report : ramanujan_check(64))
    CHECK(report.status == CheckReport::Status::Pass);
  for (const auto& report : ramanujan_check(8))
    CHECK(report.status == CheckReport::Status::Pass);
}

TEST_CASE("Chazy reports") {
  for (const auto& report : chazy_check(64)) CHECK(report.status == CheckReport::Status::Pass);
  for (const auto& report : chazy_check(8)) CHECK(report.status == CheckReport::Status::Pass);
}

TEST_CASE("Wronskian connection consistency") {
  for (const auto& report : wronskian_connection_check(40))
    CHECK(report.status == CheckReport::Status::Pass);
}

}  // TEST_SUITE

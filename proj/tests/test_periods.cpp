#include "doctest.h"
#include "schwarzian/periods.hpp"

using namespace schwarzian;

TEST_SUITE("period families") {

TEST_CASE("elliptic first-order system") {
  const RatMat gm = dedekind_gauss_manin();
  // Entry (1,1) at g = 2: 16/(8·(−25)).
  CHECK(gm.at(0, 0).eval(Rational(2)) == Rational(-2, 25));
  CHECK(gm.trace().is_zero());
  CHECK(gm.det() == -(gm.at(0, 0) * gm.at(0, 0)) - gm.at(0, 1) * gm.at(1, 0));
}

TEST_CASE("elliptic pipeline records") {
  const auto reports = dedekind_pipeline();
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].check == "elimination");
  CHECK(reports[1].check == "pullback");
  CHECK(reports[2].check == "schwarzian");
  for (const auto& r : reports) CHECK(r.status == CheckReport::Status::Pass);
}

TEST_CASE("elliptic closed forms agree") {
  // The two printed forms reduce to the same rational function.
  CHECK(dedekind_schwarzian_three_term() == dedekind_schwarzian_reduced());
  // First-derivative coefficient of the pulled-back equation is 1/j,
  // i.e. p = −1/(2j) in the 2p-normalization.
  const ScalarODE in_j = dedekind_expected_ode_j();
  CHECK(Rational(-2) * in_j.p == RatFunc(Poly{1}, Poly{0, 1}));
  // Elimination from the matrix reproduces the stored scalar form.
  CHECK(eliminate_to_scalar(dedekind_gauss_manin()) == dedekind_expected_ode_g());
}

TEST_CASE("genus-2 dataset") {
  const CoeffPair pair = genus2_pair();
  const RatFunc d = genus2_discriminant();
  CHECK(d.num().eval(Rational(0)) == Rational(3125));
  CHECK(pair.A.at(1, 0) == RatFunc(Poly{0, 750}) / d);
  CHECK(pair.q.at(1, 0) == RatFunc(Rational(375, 2)) / d);

  // Entry (2,1) of the matrix Schwarzian from an entrywise quotient-rule
  // expansion, independent of the matrix pipeline.
  const RatFunc a21 = pair.A.at(1, 0), a11 = pair.A.at(0, 0), a22 = pair.A.at(1, 1);
  const RatFunc entry =
      Rational(2) * (a21.derivative() - (a21 * a11 + a22 * a21) - pair.q.at(1, 0));
  CHECK(entry == RatFunc(Poly{3515625, 0, 0, 0, 0, -283500}, (d * d).num()));
  CHECK(entry == matrix_schwarzian(pair).at(1, 0));
}

TEST_CASE("genus-2 verification records") {
  const auto reports = genus2_schwarzian_check();
  for (const auto& r : reports)
    CHECK(r.status != CheckReport::Status::Fail);

  // The trace of the printed matrix: sum of its diagonal entries.
  const RatMat expected = genus2_expected_schwarzian();
  const RatFunc tr = expected.at(0, 0) + expected.at(1, 1);
  const Poly d2 = (genus2_discriminant() * genus2_discriminant()).num();
  CHECK(tr == RatFunc(Poly{0, 0, 0, -4350000, 0, 0, 0, 0, -4536}, d2));
  CHECK(tr == matrix_schwarzian(genus2_pair()).trace());
}

TEST_CASE("genus-2 mismatch reporting shows both sides") {
  RatMat perturbed = genus2_expected_schwarzian();
  perturbed.at(1, 0) = perturbed.at(1, 0) + RatFunc(1);
  const auto reports = genus2_schwarzian_check_against(perturbed);
  REQUIRE(!reports.empty());
  CHECK(reports[0].status == CheckReport::Status::Fail);
  CHECK(!reports[0].expected.empty());
  CHECK(!reports[0].actual.empty());
  CHECK(reports[0].expected != reports[0].actual);
}

TEST_CASE("cubic threefold closed forms") {
  const RatFunc a = cubic_a();
  // a′ = (3t + (3/2)t⁴)/(1−t³)².
  CHECK(a.derivative() ==
        RatFunc(Poly(std::vector<Rational>{Rational(0), Rational(3), Rational(0), Rational(0),
                                           Rational(3, 2)}),
                Poly{1, 0, 0, -2, 0, 0, 1}));
  const RatFunc s = cubic_expected_schwarzian();
  CHECK(s.eval(Rational(1, 2)) == Rational(130, 49));
  CHECK(Rational(2) * (a.derivative() - a * a - cubic_b()) == s);
}

TEST_CASE("cubic threefold records") {
  for (const auto& r : cubic_pipeline()) CHECK(r.status == CheckReport::Status::Pass);
}

TEST_CASE("cubic threefold characteristic polynomial") {
  // det(λI − diag(0,0,0,s,s)) = λ³(λ − s)² = λ⁵ − 2sλ⁴ + s²λ³.
  const RatFunc s = cubic_expected_schwarzian();
  const auto coeffs = matrix_schwarzian(cubic_pair()).charpoly();
  REQUIRE(coeffs.size() == 6);
  CHECK(coeffs[0].is_zero());
  CHECK(coeffs[1].is_zero());
  CHECK(coeffs[2].is_zero());
  CHECK(coeffs[3] == s * s);
  CHECK(coeffs[4] == Rational(-2) * s);
  CHECK(coeffs[5] == RatFunc(1));
}

}  // TEST_SUITE

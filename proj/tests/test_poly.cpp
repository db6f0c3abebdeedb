#include "doctest.h"
#include "schwarzian/poly.hpp"
#include "schwarzian/rng.hpp"

using namespace schwarzian;

TEST_SUITE("poly") {

TEST_CASE("normalization and degree") {
  CHECK(Poly{}.is_zero());
  CHECK(Poly{}.degree() == -1);
  CHECK(Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(0)}).degree() == 0);
  CHECK(Poly{1, 2, 3}.degree() == 2);
  CHECK(Poly{0, 1}.to_string() == "t");
  CHECK(Poly{-1, 0, 2}.to_string("x") == "2*x^2 - 1");
}

TEST_CASE("divmod invariant on random instances") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Poly a = random_poly(rng, 6);
    const Poly b = random_nonzero_poly(rng, 3);
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd divides both and respects common factors") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_nonzero_poly(rng, 4);
    const Poly b = random_nonzero_poly(rng, 4);
    const Poly c = random_nonzero_poly(rng, 3);
    const Poly g = Poly::gcd(a * c, b * c);
    CHECK((a * c % g).is_zero());
    CHECK((b * c % g).is_zero());
    // Multiplicativity: gcd(ac, bc) = monic(c)·gcd(a, b), exactly.
    CHECK(g == (c * Poly::gcd(a, b)).monic());
    CHECK(g.leading() == Rational(1));
  }
  CHECK(Poly::gcd(Poly{}, Poly{0, 2}) == Poly{0, 1});
  CHECK(Poly::gcd(Poly{3}, Poly{0, 2}) == Poly{1});

  // Higher-degree forced common factors with rational coefficients.
  Rng rng2(12);
  for (int i = 0; i < 10; ++i) {
    Poly c = random_nonzero_poly(rng2, 8);
    c = c * Rational(1, 7) + Poly(std::vector<Rational>{Rational(2, 3)});
    if (c.is_zero()) continue;
    const Poly a = random_nonzero_poly(rng2, 5);
    const Poly b = random_nonzero_poly(rng2, 5);
    CHECK(Poly::gcd(a * c, b * c) == (c * Poly::gcd(a, b)).monic());
  }
}

TEST_CASE("derivative is linear and Leibniz") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Poly a = random_poly(rng, 5);
    const Poly b = random_poly(rng, 5);
    CHECK((a + b).derivative() == a.derivative() + b.derivative());
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
}

TEST_CASE("evaluation and composition") {
  const Poly p{1, -3, 2};  // 2t² − 3t + 1
  CHECK(p.eval(Rational(2)) == Rational(3));
  CHECK(p.eval(Rational(1, 2)) == Rational(0));
  const Poly inner{1, 1};  // t + 1
  // 2(t+1)² − 3(t+1) + 1 = 2t² + t
  CHECK(p.compose(inner) == Poly{0, 1, 2});
  CHECK(p.eval(0.5) == doctest::Approx(0.0));
}

TEST_CASE("real root counting") {
  // (t − 1)(t − 2)(t + 3)
  const Poly p = Poly{-1, 1} * Poly{-2, 1} * Poly{3, 1};
  CHECK(p.count_real_roots_in(Rational(0), Rational(5)) == 2);
  CHECK(p.count_real_roots_in(Rational(-4), Rational(5)) == 3);
  CHECK(p.count_real_roots_in(Rational(3), Rational(5)) == 0);
  // Endpoint roots count.
  CHECK(p.count_real_roots_in(Rational(1), Rational(5)) == 2);
  CHECK(p.count_real_roots_in(Rational(0), Rational(1)) == 1);
  // Repeated roots are counted once.
  const Poly sq = Poly{-1, 1} * Poly{-1, 1};
  CHECK(sq.count_real_roots_in(Rational(0), Rational(2)) == 1);
  // No real roots.
  CHECK(Poly{1, 0, 1}.count_real_roots_in(Rational(-10), Rational(10)) == 0);
}

}  // TEST_SUITE

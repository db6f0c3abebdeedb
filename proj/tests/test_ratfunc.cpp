#include "doctest.h"
#include "schwarzian/ratfunc.hpp"
#include "schwarzian/rng.hpp"

using namespace schwarzian;

namespace {
const RatFunc t = RatFunc::variable();

Rational sample_points[] = {Rational(2, 3), Rational(-5, 7), Rational(3), Rational(-1, 4),
                            Rational(9, 2)};
}  // namespace

TEST_SUITE("ratfunc") {

TEST_CASE("canonical form") {
  const RatFunc f(Poly{0, 2}, Poly{0, 0, 4});  // 2t / 4t²
  CHECK(f.num() == Poly(std::vector<Rational>{Rational(1, 2)}));
  CHECK(f.den() == Poly{0, 1});
  CHECK(RatFunc(Poly{}, Poly{5}).is_zero());
  CHECK_THROWS_AS(RatFunc(Poly{1}, Poly{}), DivisionByZero);
}

TEST_CASE("field operations match the printed examples") {
  // 1/(1−t) + t/(1−t) = (1+t)/(1−t)
  const RatFunc a = RatFunc(Poly{1}, Poly{1, -1}) + RatFunc(Poly{0, 1}, Poly{1, -1});
  CHECK(a == RatFunc(Poly{1, 1}, Poly{1, -1}));

  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    const RatFunc x = random_ratfunc(rng);
    if (x.is_zero()) continue;
    CHECK(x * (RatFunc(1) / x) == RatFunc(1));
  }

  // div(t²−1, t−1) → t+1, against the long-division oracle.
  const auto [q, r] = Poly{-1, 0, 1}.divmod(Poly{-1, 1});
  CHECK(r.is_zero());
  CHECK(q == Poly{1, 1});
  CHECK(RatFunc(Poly{-1, 0, 1}, Poly{1}) / RatFunc(Poly{-1, 1}, Poly{1}) == RatFunc(q));

  CHECK_THROWS_AS(t / RatFunc(0), DivisionByZero);
}

TEST_CASE("field axioms on random instances") {
  Rng rng(17);
  for (int i = 0; i < 50; ++i) {
    const RatFunc x = random_ratfunc(rng);
    const RatFunc y = random_ratfunc(rng);
    const RatFunc z = random_ratfunc(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == RatFunc(0));
  }
}

TEST_CASE("every operation lands in canonical form") {
  auto canonical = [](const RatFunc& f) {
    if (f.is_zero()) return f.den() == Poly{1};
    return f.den().leading() == Rational(1) &&
           Poly::gcd(f.num(), f.den()).degree() == 0;
  };
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    const RatFunc x = random_ratfunc(rng, 3);
    const RatFunc y = random_ratfunc(rng, 3);
    CHECK(canonical(x + y));
    CHECK(canonical(x - y));
    CHECK(canonical(x * y));
    if (!y.is_zero()) CHECK(canonical(x / y));
    CHECK(canonical(x.derivative()));
    CHECK(canonical(x.pow(3)));
    if (!x.is_zero()) CHECK(canonical(x.pow(-2)));
    const RatFunc g = random_nonconstant_ratfunc(rng);
    CHECK(canonical(x.compose(g)));
  }
  CHECK(RatFunc(Poly{2, 4}, Poly{6, 2}).pow(-1) == RatFunc(Poly{3, 1}, Poly{1, 2}));
  CHECK(RatFunc(Poly{0, 1}).pow(0) == RatFunc(1));
}

TEST_CASE("derivative examples") {
  CHECK((t * t * t).derivative() == RatFunc(Poly{0, 0, 3}));
  CHECK(RatFunc(Poly{1}, Poly{1, -1}).derivative() == RatFunc(Poly{1}, Poly{1, -2, 1}));

  // d/dt (3t²/(2(1−t³))) = (3t + (3/2)t⁴)/(1−t³)², cross-checked against the
  // raw quotient-rule expansion and difference quotients at rational points.
  const RatFunc f(Poly{0, 0, 3}, Poly{2, 0, 0, -2});
  const RatFunc expect(Poly(std::vector<Rational>{Rational(0), Rational(3), Rational(0),
                                                  Rational(0), Rational(3, 2)}),
                       Poly{1, 0, 0, -2, 0, 0, 1});
  CHECK(f.derivative() == expect);
  const RatFunc raw(f.num().derivative() * f.den() - f.num() * f.den().derivative(),
                    f.den() * f.den());
  CHECK(f.derivative() == raw);
  const Rational h(1, 1000000);
  for (const Rational& x : sample_points) {
    const Rational diff = (f.eval(x + h) - f.eval(x - h)) / (Rational(2) * h);
    const Rational err = (diff - expect.eval(x)).abs();
    CHECK(err < Rational(1, 1000));
  }
}

TEST_CASE("derivative rules on random instances") {
  Rng rng(19);
  for (int i = 0; i < 100; ++i) {
    const RatFunc x = random_ratfunc(rng, 4);
    const RatFunc y = random_ratfunc(rng, 4);
    CHECK((x * y).derivative() == x.derivative() * y + x * y.derivative());
  }
  for (int i = 0; i < 100; ++i) {
    const RatFunc f = random_ratfunc(rng);
    const RatFunc g = random_nonconstant_ratfunc(rng);
    CHECK(f.compose(g).derivative() == f.derivative().compose(g) * g.derivative());
  }
}

TEST_CASE("composition") {
  // (at+b)/(ct+d) squared under t².
  const RatFunc mobius(Poly{3, 2}, Poly{1, 1});
  CHECK((t * t).compose(mobius) == mobius * mobius);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const RatFunc f = random_ratfunc(rng);
    CHECK(f.compose(t) == f);
  }

  // compose(1/(1−g), 27t/(t−1)) against evaluation at rational points.
  const RatFunc outer(Poly{1}, Poly{1, -1});
  const RatFunc inner(Poly{0, 27}, Poly{-1, 1});
  const RatFunc composed = outer.compose(inner);
  CHECK(composed == RatFunc(Poly{-1, 1}, Poly{-1, -26}));
  for (const Rational& x : sample_points) {
    CHECK(composed.eval(x) == outer.eval(inner.eval(x)));
  }

  CHECK_THROWS_AS(outer.compose(RatFunc(1)), PoleAtConstant);
  CHECK(outer.compose(RatFunc(3)) == RatFunc(Rational(-1, 2)));
}

}  // TEST_SUITE

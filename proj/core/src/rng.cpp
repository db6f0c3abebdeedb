#include "schwarzian/rng.hpp"

namespace schwarzian {

Poly random_poly(Rng& rng, int max_degree) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<size_t>(max_degree) + 1);
  for (int i = 0; i <= max_degree; ++i) coeffs.emplace_back(rng.int_in(-5, 5));
  return Poly(std::move(coeffs));
}

Poly random_nonzero_poly(Rng& rng, int max_degree) {
  for (;;) {
    Poly p = random_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

RatFunc random_ratfunc(Rng& rng, int max_degree) {
  return RatFunc(random_poly(rng, max_degree), random_nonzero_poly(rng, max_degree));
}

RatFunc random_nonconstant_ratfunc(Rng& rng, int max_degree) {
  for (;;) {
    RatFunc f = random_ratfunc(rng, max_degree);
    if (!f.is_constant()) return f;
  }
}

RatFunc random_mobius_of(Rng& rng, const RatFunc& f) {
  for (;;) {
    const Rational a(rng.int_in(-5, 5)), b(rng.int_in(-5, 5));
    const Rational c(rng.int_in(-5, 5)), d(rng.int_in(-5, 5));
    if ((a * d - b * c).is_zero()) continue;
    const RatFunc den = c * f + RatFunc(d);
    if (den.is_zero()) continue;
    return (a * f + RatFunc(b)) / den;
  }
}

RatMat random_matrix(Rng& rng, int n, int max_degree) {
  RatMat m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = random_ratfunc(rng, max_degree);
  return m;
}

RatMat random_invertible_matrix(Rng& rng, int n, int max_degree) {
  for (;;) {
    RatMat m = random_matrix(rng, n, max_degree);
    if (!m.det().is_zero()) return m;
  }
}

}  // namespace schwarzian

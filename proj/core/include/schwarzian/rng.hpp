#pragma once

#include <cstdint>

#include "schwarzian/ratmat.hpp"

namespace schwarzian {

/// splitmix64: small, fast and identical on every platform, so seeded runs
/// are replayable byte for byte.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi].
  long int_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

// Polynomial of degree ≤ max_degree with integer coefficients in [-5, 5].
Poly random_poly(Rng& rng, int max_degree);
Poly random_nonzero_poly(Rng& rng, int max_degree);

// Ratio of such polynomials (denominator nonzero).
RatFunc random_ratfunc(Rng& rng, int max_degree = 2);
RatFunc random_nonconstant_ratfunc(Rng& rng, int max_degree = 2);

// (a·f + b)/(c·f + d) with small integers and ad − bc ≠ 0.
RatFunc random_mobius_of(Rng& rng, const RatFunc& f);

RatMat random_matrix(Rng& rng, int n, int max_degree = 2);
// Rejection-sampled until det ≢ 0.
RatMat random_invertible_matrix(Rng& rng, int n, int max_degree = 2);

}  // namespace schwarzian

#pragma once

#include <vector>

#include "schwarzian/ratmat.hpp"

namespace schwarzian {

/// Matrix connection coefficient with an eccentricity e: under a change of
/// coordinate t = λ(τ) it picks up the inhomogeneous term e·(λ″/λ′)·I.
struct Connection {
  RatMat A;
  Rational e;

  Connection(RatMat a, Rational ecc) : A(std::move(a)), e(std::move(ecc)) {}
};

/// Coefficient pair of the second-order system ψ″ = 2Aψ′ + qψ. The connection
/// component has eccentricity 1/2.
struct CoeffPair {
  RatMat A;
  RatMat q;

  CoeffPair(RatMat a, RatMat qq);

  friend bool operator==(const CoeffPair& x, const CoeffPair& y) {
    return x.A == y.A && x.q == y.q;
  }
  friend bool operator!=(const CoeffPair& x, const CoeffPair& y) { return !(x == y); }
};

/// Change of coordinate t = λ(τ), λ nonconstant.
class CoordMap {
 public:
  explicit CoordMap(RatFunc lambda);

  const RatFunc& lambda() const { return lambda_; }
  const RatFunc& prime() const { return prime_; }
  const RatFunc& second() const { return second_; }
  // λ″/λ′.
  const RatFunc& inhomogeneity() const { return inhom_; }
  const RatFunc& schwarzian() const { return schwarzian_; }

  RatFunc pullback(const RatFunc& f) const { return f.compose(lambda_); }
  RatMat pullback(const RatMat& m) const { return m.compose(lambda_); }

 private:
  RatFunc lambda_, prime_, second_, inhom_, schwarzian_;
};

/// Scalar equation y″ = 2p·y′ + q·y.
struct ScalarODE {
  RatFunc p;
  RatFunc q;

  friend bool operator==(const ScalarODE& x, const ScalarODE& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator!=(const ScalarODE& x, const ScalarODE& y) { return !(x == y); }
};

// (f″/f′)′ − ½(f″/f′)²; throws ConstantInput for constant f.
RatFunc scalar_schwarzian(const RatFunc& f);

// S(f∘λ) = (λ′)²·(S(f)∘λ) + S(λ), checked exactly.
bool schwarzian_chain_rule_holds(const RatFunc& f, const CoordMap& map);

// F_A = A′ − A²/(2e); throws ZeroEccentricity.
RatMat curvature(const Connection& c);

// The transported coefficient λ′·(A∘λ) + e·(λ″/λ′)·I.
RatMat transport_connection(const Connection& c, const CoordMap& map);

// F of the transported coefficient equals (λ′)²·(F_A∘λ) + e·S(λ)·I.
bool curvature_anomaly_holds(const Connection& c, const CoordMap& map);

// ψ′ − (m/e)·A·ψ for a weight-m coefficient ψ; throws ZeroEccentricity.
RatMat covariant_derivative(const Connection& c, const RatMat& psi, long m);

// 2(A′ − A² − q).
RatMat matrix_schwarzian(const CoeffPair& pair);
// 2(p′ − p² − q), the scalar case.
RatFunc projective_curvature(const ScalarODE& ode);

// g•A = gAg⁻¹ + g′g⁻¹; throws SingularGauge when det g ≡ 0.
Connection gauge_act(const RatMat& g, const Connection& c);

// A ↦ g⁻¹Ag − g⁻¹g′, q ↦ g⁻¹qg + 2g⁻¹Ag′ − g⁻¹g″.
CoeffPair gauge_transform(const RatMat& g, const CoeffPair& pair);

// u ⋆ (A, q) = (A + u, q − uA − Au − u² + u′).
CoeffPair star_act(const RatMat& u, const CoeffPair& pair);

// (u⋆P)^g = (g⁻¹ug) ⋆ P^g, checked exactly.
bool gauge_star_compatible(const RatMat& u, const RatMat& g, const CoeffPair& pair);

// With q := (g″ − 2Ag′)g⁻¹, checks F_{g⁻¹•A} = g⁻¹(F_A − q)g at e = 1/2.
bool solution_gauge_conjugation_holds(const RatMat& g, const Connection& c);

// [tr B, tr B², …, tr B^rmax].
std::vector<RatFunc> characteristic_invariants(const RatMat& b, int rmax);

// det of the columns (f, f′, …, f^{(n-1)}) of a componentwise-given function.
RatFunc wronskian(const std::vector<RatFunc>& fs);

// A = (1/m)·ψ⁻¹ψ′ with eccentricity 1; throws ZeroWeight / SingularInput.
Connection maurer_cartan(const RatMat& psi, const Rational& m);

// p̃ = (p∘λ)λ′ + ½λ″/λ′, q̃ = (q∘λ)(λ′)².
ScalarODE coordinate_change(const ScalarODE& ode, const CoordMap& map);

// A ↦ T(λ′(A∘λ) + ½(λ″/λ′)I)T⁻¹, q ↦ (λ′)²·T(q∘λ)T⁻¹ for constant invertible T.
CoeffPair coordinate_change(const CoeffPair& pair, const CoordMap& map, const RatMat& frame);

// Scalar second-order equation satisfied by the first component of any
// solution of y′ = M·y for 2×2 M; throws DegenerateCoupling when M(0,1) ≡ 0.
ScalarODE eliminate_to_scalar(const RatMat& m);

}  // namespace schwarzian

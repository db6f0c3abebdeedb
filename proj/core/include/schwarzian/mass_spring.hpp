#pragma once

#include <iosfwd>
#include <vector>

#include "schwarzian/calculus.hpp"
#include "schwarzian/report.hpp"

namespace schwarzian {

/// Damped system ψ̈ = p·ψ̇ + q·ψ with meromorphic coefficient matrices
/// (p carries time⁻¹ units, q time⁻²).
struct SpringSystem {
  RatMat p;
  RatMat q;

  SpringSystem(RatMat damping, RatMat stiffness);
  int dim() const { return p.dim(); }
};

/// Sampled numeric solution: positions and velocities on a strictly
/// increasing time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> positions;
  std::vector<std::vector<double>> velocities;
};

// [[−k1−k2, k2], [k2, −k2]]; throws NonPositiveStiffness unless k1, k2 > 0.
RatMat two_mass_stiffness(const Rational& k1, const Rational& k2);

// p̃ = λ′(p∘λ) + (λ″/λ′)I, q̃ = (λ′)²(q∘λ).
SpringSystem reparametrize(const SpringSystem& sys, const CoordMap& clock);

// Traceless part of F_{p/2} − q; a clock-independent quadratic differential,
// identically zero for one degree of freedom.
RatMat projective_curvature(const SpringSystem& sys);

// Classical fourth-order one-step integration of the companion first-order
// system; throws PoleOnPath when a coefficient denominator vanishes on
// [t0, t1].
Trajectory integrate(const SpringSystem& sys, const std::vector<double>& psi0,
                     const std::vector<double>& v0, double t0, double t1, double step);

// Integrates sys in the clock t and its reparametrization in the clock τ with
// matched initial data ψ̃(τ₀) = ψ(λ(τ₀)), ψ̃′(τ₀) = λ′(τ₀)·ψ̇(λ(τ₀)), and
// returns max‖ψ̃(τ) − ψ(λ(τ))‖∞ over the window. The reference solution is
// integrated at one tenth of the step. Throws NonMonotoneClock when λ is not
// strictly monotone on the window.
double clock_invariance_deviation(const SpringSystem& sys, const CoordMap& clock, double tau0,
                                  double tau1, double step);

// Y = exp(ω·f) solves f′Y″ − f″Y′ − ω²(f′)³Y = 0; the pole-cleared residual is
// verified coefficientwise through the given series order, along with the
// two-sided combination exp(ωf) + exp(−ωf). Requires f nonconstant with
// f(0) = 0; throws ConstantPhase for constant f.
std::vector<CheckReport> harmonic_oscillator_check(const Rational& omega, const Poly& f,
                                                   int order);

// Columns: time, ψ components, ψ̇ components.
void write_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace schwarzian

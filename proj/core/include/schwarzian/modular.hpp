#pragma once

#include <string>
#include <vector>

#include "schwarzian/qseries.hpp"
#include "schwarzian/report.hpp"

namespace schwarzian {

/// q-expansion with its weight (metadata used by the Serre derivative).
struct ModularSeries {
  QSeries series;
  int weight;
  std::string label;
};

// Divisor power sum Σ_{d|n} d^r.
Integer sigma(unsigned r, unsigned n);

// E2 = 1 − 24Σσ1(n)qⁿ, E4 = 1 + 240Σσ3(n)qⁿ, E6 = 1 − 504Σσ5(n)qⁿ.
// Throws UnsupportedWeight for k ∉ {2, 4, 6}; requires order ≥ 2.
ModularSeries eisenstein(int k, int order);

enum class DeltaMethod { Product, Eisenstein };

// The weight-12 cusp form, via q·Π(1−qⁿ)²⁴ or (E4³ − E6²)/1728.
ModularSeries delta(int order, DeltaMethod method);

// ψ ↦ Dψ − (k/12)·E2·ψ, sending weight k to weight k + 2.
ModularSeries serre_derivative(const ModularSeries& f);

// E2′ = (E2² − E4)/12, E4′ = (E2E4 − E6)/3, E6′ = (E2E6 − E4²)/2,
// verified coefficientwise to the given order.
std::vector<CheckReport> ramanujan_check(int order);

// u = E2 solves 2u‴ − 2uu″ + 3(u′)² = 0; with A = E2/6 at eccentricity 1 the
// covariant form ∇²F_A + 12F_A² = 0 holds with F_A = −E4/72,
// ∇F_A = E6/216, ∇²F_A = −E4²/432.
std::vector<CheckReport> chazy_check(int order);

// Arithmetic consistency of the scalar connection (2/10)·DW/W built from the
// Wronskian of (E4, E6), and of its weight-4 curvature.
std::vector<CheckReport> wronskian_connection_check(int order);

}  // namespace schwarzian

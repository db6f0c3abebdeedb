#pragma once

#include <vector>

#include "schwarzian/calculus.hpp"
#include "schwarzian/report.hpp"

namespace schwarzian {

// --- Elliptic family over the g-line (pullback coordinate j) ---------------

// First-order system satisfied by the period vector, as a 2×2 matrix over Q(g).
RatMat dedekind_gauss_manin();

// Scalar equation in g obtained by elimination, stored closed form.
ScalarODE dedekind_expected_ode_g();
// Scalar equation in j after the substitution g = 27j/(j−1), stored closed form.
ScalarODE dedekind_expected_ode_j();

// 3/(8(1−j)²) + 4/(9j²) + 23/(72j(1−j)), summed exactly.
RatFunc dedekind_schwarzian_three_term();
// (36j² − 41j + 32)/(72j²(1−j)²).
RatFunc dedekind_schwarzian_reduced();

// Elimination, pullback, Schwarzian — three records.
std::vector<CheckReport> dedekind_pipeline();

// --- Genus-2 hyperelliptic family y² = x⁵ + t·x² + 1 -----------------------

// D(t) = 108t⁵ + 3125.
RatFunc genus2_discriminant();
CoeffPair genus2_pair();
RatMat genus2_expected_schwarzian();

std::vector<CheckReport> genus2_schwarzian_check();
// Same pipeline against a caller-supplied target (used to exercise the
// mismatch path with a perturbed dataset).
std::vector<CheckReport> genus2_schwarzian_check_against(const RatMat& expected);

// --- Cubic-threefold deformation of the Fermat cubic -----------------------

// a(t) = 3t²/(2(1−t³)) and b(t) = t/(1−t³).
RatFunc cubic_a();
RatFunc cubic_b();
// s(t) = t(t³+8)/(2(1−t³)²).
RatFunc cubic_expected_schwarzian();
// The 5×5 diagonal pair diag(0,0,0,a,a), diag(0,0,0,b,b).
CoeffPair cubic_pair();

std::vector<CheckReport> cubic_pipeline();

}  // namespace schwarzian

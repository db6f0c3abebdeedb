#include "schwarzian/mass_spring.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "schwarzian/qseries.hpp"

namespace schwarzian {

SpringSystem::SpringSystem(RatMat damping, RatMat stiffness)
    : p(std::move(damping)), q(std::move(stiffness)) {
  if (p.dim() != q.dim())
    throw std::invalid_argument("damping and stiffness dimensions differ");
}

RatMat two_mass_stiffness(const Rational& k1, const Rational& k2) {
  if (k1.sign() <= 0 || k2.sign() <= 0)
    throw NonPositiveStiffness("spring constants must be positive");
  return RatMat{{RatFunc(-k1 - k2), RatFunc(k2)}, {RatFunc(k2), RatFunc(-k2)}};
}

SpringSystem reparametrize(const SpringSystem& sys, const CoordMap& clock) {
  const int n = sys.dim();
  return SpringSystem(
      clock.prime() * clock.pullback(sys.p) + RatMat::scalar(n, clock.inhomogeneity()),
      clock.prime() * clock.prime() * clock.pullback(sys.q));
}

RatMat projective_curvature(const SpringSystem& sys) {
  const int n = sys.dim();
  const RatMat a = Rational(1, 2) * sys.p;
  const RatMat s = a.derivative() - a * a - sys.q;
  return s - RatMat::scalar(n, s.trace() / RatFunc(Rational(n)));
}

namespace {

// Exact no-pole certificate for every coefficient denominator on [lo, hi].
void require_pole_free(const SpringSystem& sys, double lo, double hi) {
  const Rational a = Rational::from_double(std::min(lo, hi));
  const Rational b = Rational::from_double(std::max(lo, hi));
  for (const RatMat* m : {&sys.p, &sys.q})
    for (int i = 0; i < sys.dim(); ++i)
      for (int j = 0; j < sys.dim(); ++j) {
        const Poly& den = m->at(i, j).den();
        if (!den.is_constant() && den.count_real_roots_in(a, b) > 0)
          throw PoleOnPath("coefficient pole inside the integration window");
      }
}

struct DenseSystem {
  const SpringSystem* sys;
  int n;

  // d/dt (ψ, v) = (v, p(t)v + q(t)ψ).
  void eval(double t, const std::vector<double>& y, std::vector<double>& dy) const {
    for (int i = 0; i < n; ++i) dy[static_cast<size_t>(i)] = y[static_cast<size_t>(n + i)];
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        acc += sys->p.at(i, j).eval(t) * y[static_cast<size_t>(n + j)];
        acc += sys->q.at(i, j).eval(t) * y[static_cast<size_t>(j)];
      }
      dy[static_cast<size_t>(n + i)] = acc;
    }
  }

  void rk4_step(double t, double h, std::vector<double>& y) const {
    const size_t m = y.size();
    std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
    eval(t, y, k1);
    for (size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    eval(t + 0.5 * h, tmp, k2);
    for (size_t i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    eval(t + 0.5 * h, tmp, k3);
    for (size_t i = 0; i < m; ++i) tmp[i] = y[i] + h * k3[i];
    eval(t + h, tmp, k4);
    for (size_t i = 0; i < m; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
};

}  // namespace

Trajectory integrate(const SpringSystem& sys, const std::vector<double>& psi0,
                     const std::vector<double>& v0, double t0, double t1, double step) {
  const int n = sys.dim();
  if (static_cast<int>(psi0.size()) != n || static_cast<int>(v0.size()) != n)
    throw std::invalid_argument("initial data dimension mismatch");
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  if (!(t1 > t0)) throw std::invalid_argument("empty integration window");
  require_pole_free(sys, t0, t1);

  const DenseSystem rhs{&sys, n};
  const double span = t1 - t0;
  const int steps = std::max(1, static_cast<int>(std::ceil(span / step)));
  const double h = span / steps;

  std::vector<double> y(static_cast<size_t>(2 * n));
  std::copy(psi0.begin(), psi0.end(), y.begin());
  std::copy(v0.begin(), v0.end(), y.begin() + n);

  Trajectory traj;
  auto push = [&](double t) {
    traj.times.push_back(t);
    traj.positions.emplace_back(y.begin(), y.begin() + n);
    traj.velocities.emplace_back(y.begin() + n, y.end());
  };
  push(t0);
  for (int k = 0; k < steps; ++k) {
    rhs.rk4_step(t0 + k * h, h, y);
    push(t0 + (k + 1) * h);
  }
  return traj;
}

double clock_invariance_deviation(const SpringSystem& sys, const CoordMap& clock, double tau0,
                                  double tau1, double step) {
  if (!(tau1 > tau0)) throw std::invalid_argument("empty clock window");
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");

  // Strict monotonicity of λ: no zero of λ′ and no pole of λ inside the window.
  const Rational lo = Rational::from_double(tau0), hi = Rational::from_double(tau1);
  const RatFunc lambda_prime = clock.prime();
  if (lambda_prime.num().count_real_roots_in(lo, hi) > 0 ||
      (!clock.lambda().den().is_constant() &&
       clock.lambda().den().count_real_roots_in(lo, hi) > 0))
    throw NonMonotoneClock("clock map is not strictly monotone on the window");

  const SpringSystem tilde = reparametrize(sys, clock);
  require_pole_free(tilde, tau0, tau1);

  const int n = sys.dim();
  const int steps = std::max(1, static_cast<int>(std::ceil((tau1 - tau0) / step)));
  const double h = (tau1 - tau0) / steps;

  // Reference initial data in the t clock: ψ = 1, ψ̇ = 0 componentwise.
  const double t_start = clock.lambda().eval(tau0);
  std::vector<double> y_ref(static_cast<size_t>(2 * n), 0.0);
  for (int i = 0; i < n; ++i) y_ref[static_cast<size_t>(i)] = 1.0;

  // Matched data in the τ clock: ψ̃ = ψ(λ(τ0)), ψ̃′ = λ′(τ0)·ψ̇(λ(τ0)).
  const double slope0 = lambda_prime.eval(tau0);
  std::vector<double> y_tilde(static_cast<size_t>(2 * n), 0.0);
  for (int i = 0; i < n; ++i) {
    y_tilde[static_cast<size_t>(i)] = y_ref[static_cast<size_t>(i)];
    y_tilde[static_cast<size_t>(n + i)] = slope0 * y_ref[static_cast<size_t>(n + i)];
  }

  require_pole_free(sys, t_start, clock.lambda().eval(tau1));
  const DenseSystem rhs_ref{&sys, n};
  const DenseSystem rhs_tilde{&tilde, n};

  double deviation = 0.0;
  double t_prev = t_start;
  for (int k = 0; k < steps; ++k) {
    const double tau = tau0 + k * h;
    rhs_tilde.rk4_step(tau, h, y_tilde);
    const double t_next = clock.lambda().eval(tau + h);
    // Reference marches through the image grid at a tenth of the step.
    const double sub = (t_next - t_prev) / 10.0;
    for (int s = 0; s < 10; ++s) rhs_ref.rk4_step(t_prev + s * sub, sub, y_ref);
    t_prev = t_next;
    for (int i = 0; i < n; ++i)
      deviation = std::max(deviation, std::abs(y_tilde[static_cast<size_t>(i)] -
                                               y_ref[static_cast<size_t>(i)]));
  }
  return deviation;
}

std::vector<CheckReport> harmonic_oscillator_check(const Rational& omega, const Poly& f,
                                                   int order) {
  if (f.is_constant()) throw ConstantPhase("phase polynomial must be nonconstant");
  const std::string suite = "mass-spring";
  const std::string tag = "(order=" + std::to_string(order) + ")";

  // Everything runs through D = t·d/dt on the pole-cleared form
  //   t²·R = f′·(D²Y − DY) − t·f″·DY − ω²(f′)³·t²·Y,
  // so no truncation order is lost; two guard coefficients make the residual
  // exact through the requested order.
  const int work = order + 2;
  const Poly fp = f.derivative();
  const Poly fpp = fp.derivative();
  const QSeries fp_s = QSeries::from_poly(fp, work);
  const QSeries t_fpp = QSeries::from_poly(Poly::monomial(1, Rational(1)) * fpp, work);
  const QSeries t2 = QSeries::from_poly(Poly::monomial(2, Rational(1)), work);
  const QSeries fp3 = fp_s * fp_s * fp_s;

  auto residual = [&](const QSeries& y) {
    const QSeries dy = y.derive();
    const QSeries d2y = dy.derive();
    return fp_s * (d2y - dy) - t_fpp * dy - omega * omega * (fp3 * t2 * y);
  };

  std::vector<CheckReport> reports;
  auto record = [&](const std::string& name, const QSeries& res) {
    reports.push_back(CheckReport::make(suite, name + tag, "ex:quantum-second-order-ode",
                                        res.is_zero(), "0", res.to_string("t")));
  };
  const QSeries y_plus = (QSeries::from_poly(f, work) * omega).exp();
  const QSeries y_minus = (QSeries::from_poly(f, work) * (-omega)).exp();
  record("exp(w*f)-solves-oscillator", residual(y_plus));
  record("exp(w*f)+exp(-w*f)-solves-oscillator", residual(y_plus + y_minus));
  return reports;
}

void write_csv(const Trajectory& trajectory, std::ostream& out) {
  const size_t n = trajectory.positions.empty() ? 0 : trajectory.positions.front().size();
  out << "time";
  for (size_t i = 0; i < n; ++i) out << ",psi" << i;
  for (size_t i = 0; i < n; ++i) out << ",dpsi" << i;
  out << "\n";
  out.precision(17);
  for (size_t k = 0; k < trajectory.times.size(); ++k) {
    out << trajectory.times[k];
    for (double v : trajectory.positions[k]) out << "," << v;
    for (double v : trajectory.velocities[k]) out << "," << v;
    out << "\n";
  }
}

}  // namespace schwarzian

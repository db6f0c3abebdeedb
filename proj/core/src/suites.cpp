#include "schwarzian/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <iterator>
#include <stdexcept>

#include "schwarzian/calculus.hpp"
#include "schwarzian/mass_spring.hpp"
#include "schwarzian/modular.hpp"
#include "schwarzian/periods.hpp"
#include "schwarzian/rng.hpp"

namespace schwarzian {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

std::string seeded(const std::string& name, const SuiteOptions& o, int trials) {
  return name + "(seed=" + std::to_string(o.seed) + ",trials=" + std::to_string(trials) + ")";
}

int reduced_trials(const SuiteOptions& o) { return std::max(o.trials / 4, 10); }

using Reports = std::vector<CheckReport>;

void push(Reports& r, const std::string& suite, const std::string& check,
          const std::string& anchor, bool ok, const std::string& expected = "",
          const std::string& actual = "") {
  r.push_back(CheckReport::make(suite, check, anchor, ok, expected, actual));
}

// ---------------------------------------------------------------------------

Reports suite_core(const SuiteOptions& o) {
  Reports r;
  const std::string s = "core";
  const RatFunc t = RatFunc::variable();

  push(r, s, "schwarzian-of-mobius-is-zero", "sec:curvature-gauge",
       scalar_schwarzian((Rational(2) * t + RatFunc(3)) / (t + RatFunc(2))).is_zero());

  const bool powers = scalar_schwarzian(t * t) == RatFunc(Poly{-3}, Poly{0, 0, 2}) &&
                      scalar_schwarzian(t * t * t) == RatFunc(Poly{-4}, Poly{0, 0, 1});
  push(r, s, "schwarzian-power-examples", "sec:classical-ode-schwarzian", powers);

  {
    Rng rng(o.seed);
    bool ok = true;
    for (int i = 0; i < o.trials && ok; ++i) {
      const RatFunc f = random_nonconstant_ratfunc(rng);
      ok = scalar_schwarzian(random_mobius_of(rng, f)) == scalar_schwarzian(f);
    }
    push(r, s, seeded("mobius-invariance", o, o.trials), "sec:curvature-gauge", ok);
  }
  {
    Rng rng(o.seed);
    bool ok = true;
    for (int i = 0; i < o.trials && ok; ++i) {
      const RatFunc f = random_nonconstant_ratfunc(rng);
      const CoordMap map(random_nonconstant_ratfunc(rng));
      ok = schwarzian_chain_rule_holds(f, map);
    }
    push(r, s, seeded("chain-rule", o, o.trials), "sec:projective-curvature", ok);
  }

  for (const Rational& e : {Rational(1, 2), Rational(1), Rational(2)}) {
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      const Connection c(random_matrix(rng, 2), e);
      const CoordMap map(random_nonconstant_ratfunc(rng));
      ok = curvature_anomaly_holds(c, map);
    }
    push(r, s, seeded("anomaly-law(e=" + e.to_string() + ")", o, n_trials),
         "def:quantum-curvature", ok);
  }

  {
    // Transported weight-m coefficients differentiate covariantly to weight m+1.
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      const long m = rng.int_in(0, 3);
      const Connection c(random_matrix(rng, 2), Rational(rng.int_in(1, 2)));
      const RatMat psi = random_matrix(rng, 2);
      const CoordMap map(random_nonconstant_ratfunc(rng));
      const RatFunc w = map.prime().pow(m);
      const RatMat psi_j = w * map.pullback(psi);
      const Connection c_j(transport_connection(c, map), c.e);
      const RatMat lhs = covariant_derivative(c_j, psi_j, m);
      const RatMat rhs = (w * map.prime()) * map.pullback(covariant_derivative(c, psi, m));
      ok = lhs == rhs;
    }
    push(r, s, seeded("covariant-derivative-weight-law", o, n_trials),
         "def:quantum-covariant-derivative", ok);
  }

  {
    // Scalar pre-Schwarzian connection f″/f′ has curvature S(f) at e = 1.
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      const RatFunc f = random_nonconstant_ratfunc(rng);
      const RatFunc a = f.derivative().derivative() / f.derivative();
      const RatMat curv = curvature(Connection(RatMat{{a}}, Rational(1)));
      ok = curv.at(0, 0) == scalar_schwarzian(f);
    }
    push(r, s, seeded("pre-schwarzian-curvature", o, n_trials), "rem:maurer-cartan-fpp", ok);
  }

  {
    // Witness that F alone is not gauge covariant: A = [[0,t],[0,0]], g = diag(t,1).
    const Connection c(RatMat{{RatFunc(0), t}, {RatFunc(0), RatFunc(0)}}, Rational(1, 2));
    const RatMat g = RatMat::diagonal({t, RatFunc(1)});
    const RatMat lhs = curvature(gauge_act(g, c));
    const RatMat rhs = g * curvature(c) * g.inverse();
    push(r, s, "curvature-noncovariance-witness", "rem:curvature-not-gauge-invariant",
         lhs != rhs, "different matrices", lhs == rhs ? "unexpectedly equal" : "differ");
  }

  {
    const Connection mc = maurer_cartan(RatMat::diagonal({t, t * t}), Rational(1));
    const bool ok = mc.A == RatMat::diagonal({t.inverse(), Rational(2) * t.inverse()}) &&
                    mc.e == Rational(1);
    push(r, s, "maurer-cartan-diagonal-example", "lem:maurer-cartan", ok);
  }

  {
    // Companion form: y′ = z, z′ = q₀·y eliminates to y″ = q₀·y.
    const RatFunc q0(Rational(7, 3));
    const ScalarODE ode =
        eliminate_to_scalar(RatMat{{RatFunc(0), RatFunc(1)}, {q0, RatFunc(0)}});
    push(r, s, "elimination-companion-form", "prop:dedekind-pf",
         ode.p.is_zero() && ode.q == q0);
  }

  {
    // Matrix-level coordinate change has the same scalar anomaly.
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      const CoeffPair pair(random_matrix(rng, 2), random_matrix(rng, 2));
      const CoordMap map(random_nonconstant_ratfunc(rng));
      RatMat frame(2);
      do {
        frame = RatMat{{RatFunc(Rational(rng.int_in(-3, 3))), RatFunc(Rational(rng.int_in(-3, 3)))},
                       {RatFunc(Rational(rng.int_in(-3, 3))), RatFunc(Rational(rng.int_in(-3, 3)))}};
      } while (frame.det().is_zero());
      const CoeffPair moved = coordinate_change(pair, map, frame);
      const RatMat lhs = matrix_schwarzian(moved);
      const RatMat rhs =
          map.prime() * map.prime() * (frame * map.pullback(matrix_schwarzian(pair)) * frame.inverse()) +
          RatMat::scalar(2, map.schwarzian());
      ok = lhs == rhs;
    }
    push(r, s, seeded("pair-coordinate-change-anomaly", o, n_trials),
         "thm:period-Aq-transformation", ok);
  }
  return r;
}

// ---------------------------------------------------------------------------

Reports suite_wronskian(const SuiteOptions& o) {
  Reports r;
  const std::string s = "wronskian";
  const RatFunc t = RatFunc::variable();

  push(r, s, "wronskian-basis-examples", "sec:quantum-connections",
       wronskian({RatFunc(1), t}) == RatFunc(1) &&
           wronskian({RatFunc(1), t, t * t}) == RatFunc(2));

  for (int n : {2, 3}) {
    Rng rng(o.seed);
    const int n_trials = std::max(o.trials / (n == 2 ? 4 : 8), 10);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      std::vector<RatFunc> fs;
      for (int k = 0; k < n; ++k) fs.push_back(random_ratfunc(rng));
      const CoordMap map(random_mobius_of(rng, t));
      std::vector<RatFunc> pulled;
      for (const auto& f : fs) pulled.push_back(map.pullback(f));
      const RatFunc lhs = wronskian(pulled);
      const RatFunc rhs = map.prime().pow(n * (n - 1) / 2) * map.pullback(wronskian(fs));
      ok = lhs == rhs;
    }
    push(r, s, seeded("weight-law(n=" + std::to_string(n) + ")", o, n_trials),
         "sec:quantum-connections", ok);
  }

  {
    // Scalar case of the logarithmic-derivative connection: ψ = f′ gives f″/f′.
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      const RatFunc f = random_nonconstant_ratfunc(rng);
      const Connection mc = maurer_cartan(RatMat{{f.derivative()}}, Rational(1));
      ok = mc.A.at(0, 0) == f.derivative().derivative() / f.derivative();
    }
    push(r, s, seeded("maurer-cartan-pre-schwarzian", o, n_trials), "rem:maurer-cartan-fpp", ok);
  }
  return r;
}

// ---------------------------------------------------------------------------

Reports suite_gauge(const SuiteOptions& o) {
  Reports r;
  const std::string s = "gauge";
  const Rational half(1, 2);

  {
    Rng rng(o.seed);
    bool conj = true, schw = true, invariants = true;
    for (int i = 0; i < o.trials && conj && schw && invariants; ++i) {
      const RatMat a = random_matrix(rng, 2);
      const RatMat q = random_matrix(rng, 2);
      const RatMat g = random_invertible_matrix(rng, 2);
      const CoeffPair pair(a, q);
      const CoeffPair moved = gauge_transform(g, pair);
      const RatMat ginv = g.inverse();
      conj = curvature(Connection(moved.A, half)) - moved.q ==
             ginv * (curvature(Connection(a, half)) - q) * g;
      const RatMat s_orig = matrix_schwarzian(pair);
      const RatMat s_moved = matrix_schwarzian(moved);
      schw = s_moved == ginv * s_orig * g;
      invariants = characteristic_invariants(s_moved, 3) == characteristic_invariants(s_orig, 3);
    }
    push(r, s, seeded("conjugation-law", o, o.trials), "lem:gauge-action-on-q", conj);
    push(r, s, seeded("schwarzian-conjugation", o, o.trials), "lem:gauge-action-on-q", schw);
    push(r, s, seeded("characteristic-invariants", o, o.trials),
         "rem:quantum-characteristic-invariants", invariants);
  }

  {
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      const Connection c(random_matrix(rng, 2), Rational(rng.int_in(1, 3)));
      const RatMat g = random_invertible_matrix(rng, 2);
      const RatMat h = random_invertible_matrix(rng, 2);
      ok = gauge_act(g * h, c).A == gauge_act(g, gauge_act(h, c)).A;
    }
    push(r, s, seeded("left-action-law", o, n_trials), "def:gauge-action", ok);
  }

  {
    Rng rng(o.seed);
    bool lemma = true, kills_q = true;
    for (int i = 0; i < o.trials && lemma && kills_q; ++i) {
      const RatMat a = random_matrix(rng, 2);
      const RatMat g = random_invertible_matrix(rng, 2);
      const Connection c(a, half);
      lemma = solution_gauge_conjugation_holds(g, c);
      // g solves g″ = 2Ag′ + qg for this q, so the transformed q vanishes.
      const RatMat gp = g.derivative();
      const RatMat q = (gp.derivative() - Rational(2) * (a * gp)) * g.inverse();
      kills_q = gauge_transform(g, CoeffPair(a, q)).q.is_zero();
    }
    push(r, s, seeded("solution-gauge-conjugation", o, o.trials), "lem:gauge-curvature-ehalf",
         lemma);
    push(r, s, seeded("solution-gauge-kills-q", o, o.trials), "lem:gauge-action-on-q", kills_q);
  }
  return r;
}

// ---------------------------------------------------------------------------

Reports suite_star(const SuiteOptions& o) {
  Reports r;
  const std::string s = "star";
  Rng rng(o.seed);
  bool group = true, invariant = true, compatible = true;
  for (int i = 0; i < o.trials && group && invariant && compatible; ++i) {
    const CoeffPair pair(random_matrix(rng, 2), random_matrix(rng, 2));
    const RatMat u = random_matrix(rng, 2);
    const RatMat v = random_matrix(rng, 2);
    const RatMat g = random_invertible_matrix(rng, 2);
    group = star_act(v, star_act(u, pair)) == star_act(u + v, pair);
    invariant = matrix_schwarzian(star_act(u, pair)) == matrix_schwarzian(pair);
    compatible = gauge_star_compatible(u, g, pair);
  }
  push(r, s, seeded("additive-group-law", o, o.trials), "lem:star-is-action", group);
  push(r, s, seeded("schwarzian-invariance", o, o.trials), "lem:FA-q-invariant-star", invariant);
  push(r, s, seeded("gauge-compatibility", o, o.trials), "lem:gauge-star-compatible", compatible);
  return r;
}

// ---------------------------------------------------------------------------

Reports suite_modular(const SuiteOptions& o) {
  Reports r;
  const std::string s = "modular";

  {
    const ModularSeries e2 = eisenstein(2, 4), e4 = eisenstein(4, 3), e6 = eisenstein(6, 2);
    const bool ok = e2.series == QSeries(4, {Rational(1), Rational(-24), Rational(-72),
                                             Rational(-96)}) &&
                    e4.series == QSeries(3, {Rational(1), Rational(240), Rational(2160)}) &&
                    e6.series == QSeries(2, {Rational(1), Rational(-504)});
    push(r, s, "eisenstein-leading-coefficients", "sec:serre-derivative", ok);
  }
  push(r, s, "sigma-spot-values", "sec:serre-derivative",
       sigma(1, 6) == 12 && sigma(3, 2) == 9 && sigma(1, 1) == 1);

  for (CheckReport& rep : ramanujan_check(o.order)) r.push_back(std::move(rep));

  {
    const ModularSeries prod = delta(o.order, DeltaMethod::Product);
    const ModularSeries eis = delta(o.order, DeltaMethod::Eisenstein);
    const bool cross = prod.series == eis.series;
    const bool leading = prod.series.coeff(0).is_zero() && prod.series.coeff(1) == Rational(1);
    push(r, s, "delta-product-vs-eisenstein(order=" + std::to_string(o.order) + ")",
         "sec:serre-derivative", cross,
         cross ? "" : eis.series.to_string(), cross ? "" : prod.series.to_string());
    push(r, s, "delta-leading-term-q", "sec:serre-derivative", leading);
  }

  {
    const int n = o.order;
    const ModularSeries e4 = eisenstein(4, n), e6 = eisenstein(6, n);
    const ModularSeries de4 = serre_derivative(e4), de6 = serre_derivative(e6);
    const ModularSeries dd = serre_derivative(delta(n, DeltaMethod::Eisenstein));
    const bool ok4 = de4.series == e6.series * Rational(-1, 3) && de4.weight == 6;
    const bool ok6 = de6.series == e4.series * e4.series * Rational(-1, 2) && de6.weight == 8;
    const bool okd = dd.series.is_zero() && dd.weight == 14;
    push(r, s, "serre-derivative-E4", "sec:serre-derivative", ok4);
    push(r, s, "serre-derivative-E6", "sec:serre-derivative", ok6);
    push(r, s, "serre-derivative-annihilates-delta", "sec:serre-derivative", okd);
  }

  {
    // Leibniz rule for the normalized derivation on random truncated series.
    Rng rng(o.seed);
    const int n_trials = 25;
    bool ok = true;
    for (int i = 0; i < n_trials && ok; ++i) {
      std::vector<Rational> ca, cb;
      for (int k = 0; k < 16; ++k) {
        ca.emplace_back(rng.int_in(-5, 5));
        cb.emplace_back(rng.int_in(-5, 5));
      }
      const QSeries a(16, ca), b(16, cb);
      ok = (a * b).derive() == a.derive() * b + a * b.derive();
    }
    push(r, s, seeded("normalized-derivation-leibniz", o, n_trials), "sec:serre-derivative", ok);
  }

  for (CheckReport& rep : wronskian_connection_check(o.order)) r.push_back(std::move(rep));
  return r;
}

// ---------------------------------------------------------------------------

Reports suite_mass_spring(const SuiteOptions& o) {
  Reports r;
  const std::string s = "mass-spring";
  const RatFunc t = RatFunc::variable();
  const double h = o.step;

  {
    const RatMat k = two_mass_stiffness(Rational(1), Rational(1));
    const bool printed = k == RatMat{{RatFunc(-2), RatFunc(1)}, {RatFunc(1), RatFunc(-1)}};
    bool rejected = false;
    try {
      two_mass_stiffness(Rational(1), Rational(0));
    } catch (const NonPositiveStiffness&) {
      rejected = true;
    }
    push(r, s, "two-mass-stiffness-matrix", "eq:two-mass-matrix-second-order",
         printed && rejected);
  }

  {
    Rng rng(o.seed);
    const int n_trials = reduced_trials(o);
    bool scalar_zero = true, traceless = true, tensor = true;
    for (int i = 0; i < n_trials && scalar_zero && traceless && tensor; ++i) {
      const SpringSystem one(RatMat{{random_ratfunc(rng)}}, RatMat{{random_ratfunc(rng)}});
      scalar_zero = projective_curvature(one).is_zero();

      const SpringSystem sys(random_matrix(rng, 2), random_matrix(rng, 2));
      const RatMat curv = projective_curvature(sys);
      traceless = curv.trace().is_zero();

      const CoordMap map(random_nonconstant_ratfunc(rng));
      tensor = projective_curvature(reparametrize(sys, map)) ==
               map.prime() * map.prime() * map.pullback(curv);
    }
    push(r, s, seeded("projective-curvature-n1-vanishes", o, n_trials), "eq:proj-curvature",
         scalar_zero);
    push(r, s, seeded("projective-curvature-traceless", o, n_trials), "eq:proj-curvature",
         traceless);
    push(r, s, seeded("projective-curvature-tensor-law", o, n_trials), "eq:proj-curvature",
         tensor);
  }

  {
    const SpringSystem free2(RatMat(2), RatMat(2));
    const SpringSystem moved = reparametrize(free2, CoordMap(t * t));
    push(r, s, "reparametrize-free-system", "sec:mass-spring-system",
         moved.p == RatMat::scalar(2, t.inverse()) && moved.q.is_zero());
  }

  const SpringSystem two_mass(RatMat(2), two_mass_stiffness(Rational(1), Rational(1)));

  {
    const CoordMap clock(t + Rational(1, 4) * t * t);
    const double dev = clock_invariance_deviation(two_mass, clock, 0.0, 1.0, h);
    push(r, s, "clock-invariance-two-mass(h=" + fmt_double(h) + ")", "sec:mass-spring-system",
         dev <= 1e-6, "<= 1.000000e-06", fmt_double(dev));

    const double dev_half = clock_invariance_deviation(two_mass, clock, 0.0, 1.0, 0.02 / 2);
    const double dev_full = clock_invariance_deviation(two_mass, clock, 0.0, 1.0, 0.02);
    const double factor = dev_half > 0.0 ? dev_full / dev_half : 16.0;
    push(r, s, "integrator-fourth-order-convergence", "sec:mass-spring-system", factor >= 12.0,
         ">= 12", fmt_double(factor));
  }

  {
    const SpringSystem damped(RatMat{{RatFunc(Rational(-1, 10))}}, RatMat{{RatFunc(-1)}});
    const CoordMap mobius(t / (RatFunc(1) - Rational(1, 4) * t));
    const double dev = clock_invariance_deviation(damped, mobius, 0.0, 1.0, h);
    push(r, s, "clock-invariance-damped-mobius(h=" + fmt_double(h) + ")",
         "sec:mass-spring-system", dev <= 1e-6, "<= 1.000000e-06", fmt_double(dev));
  }

  {
    const Trajectory traj = integrate(two_mass, {1.0, 0.0}, {0.0, 1.0}, 0.0, 10.0, h);
    // Undamped: E = ½|ψ̇|² + ½ψᵀKψ with K = −q is conserved.
    auto energy = [&](size_t k) {
      const auto& x = traj.positions[k];
      const auto& v = traj.velocities[k];
      const double quad = 2.0 * x[0] * x[0] - 2.0 * x[0] * x[1] + x[1] * x[1];
      return 0.5 * (v[0] * v[0] + v[1] * v[1]) + 0.5 * quad;
    };
    double drift = 0.0;
    for (size_t k = 0; k < traj.times.size(); ++k)
      drift = std::max(drift, std::abs(energy(k) - energy(0)));
    push(r, s, "two-mass-energy-drift(h=" + fmt_double(h) + ")", "eq:two-mass-matrix-second-order",
         drift <= 1e-6, "<= 1.000000e-06", fmt_double(drift));
  }

  {
    const SpringSystem unit(RatMat{{RatFunc(0)}}, RatMat{{RatFunc(-1)}});
    const Trajectory traj =
        integrate(unit, {1.0}, {0.0}, 0.0, 3.14159265358979323846, h);
    const double end = traj.positions.back()[0];
    push(r, s, "unit-oscillator-cosine-endpoint(h=" + fmt_double(h) + ")",
         "eq:mass-spring-single", std::abs(end + 1.0) <= 1e-8, "-1 +/- 1e-08", fmt_double(end));
  }

  for (CheckReport& rep : harmonic_oscillator_check(Rational(1), Poly{0, 1}, 32))
    r.push_back(std::move(rep));
  for (CheckReport& rep : harmonic_oscillator_check(Rational(2), Poly{0, 1, 1}, 32))
    r.push_back(std::move(rep));
  return r;
}

// ---------------------------------------------------------------------------

Reports suite_genus2(const SuiteOptions& o) {
  if (!o.inject_failure) return genus2_schwarzian_check();
  RatMat perturbed = genus2_expected_schwarzian();
  perturbed.at(1, 0) = perturbed.at(1, 0) + RatFunc(1);
  return genus2_schwarzian_check_against(perturbed);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "core",  "wronskian", "gauge",   "star",       "modular",
      "chazy", "dedekind",  "genus2",  "cubic3fold", "mass-spring"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "core") return suite_core(options);
  if (name == "wronskian") return suite_wronskian(options);
  if (name == "gauge") return suite_gauge(options);
  if (name == "star") return suite_star(options);
  if (name == "modular") return suite_modular(options);
  if (name == "chazy") return chazy_check(options.order);
  if (name == "dedekind") return dedekind_pipeline();
  if (name == "genus2") return suite_genus2(options);
  if (name == "cubic3fold") return cubic_pipeline();
  if (name == "mass-spring") return suite_mass_spring(options);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<CheckReport> run_all_suites(const SuiteOptions& options) {
  // Suites are pure functions over immutable values, so they run
  // concurrently; records stay buffered per suite and are emitted in the
  // fixed registry order, keeping the output deterministic.
  std::vector<std::future<std::vector<CheckReport>>> pending;
  pending.reserve(suite_names().size());
  for (const std::string& name : suite_names())
    pending.push_back(std::async(std::launch::async,
                                 [name, options] { return run_suite(name, options); }));
  std::vector<CheckReport> all;
  for (auto& future : pending) {
    std::vector<CheckReport> part = future.get();
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace schwarzian

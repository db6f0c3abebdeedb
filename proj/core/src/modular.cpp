#include "schwarzian/modular.hpp"

#include <stdexcept>

#include "schwarzian/errors.hpp"

namespace schwarzian {

Integer sigma(unsigned r, unsigned n) {
  if (n < 1) throw std::invalid_argument("sigma requires n >= 1");
  Integer total = 0;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer lo(d), hi(n / d);
    Integer term_lo, term_hi;
    mpz_pow_ui(term_lo.get_mpz_t(), lo.get_mpz_t(), r);
    total += term_lo;
    if (d != n / d) {
      mpz_pow_ui(term_hi.get_mpz_t(), hi.get_mpz_t(), r);
      total += term_hi;
    }
  }
  return total;
}

namespace {
void require_order(int order) {
  if (order < 2) throw std::invalid_argument("q-expansion order must be at least 2");
}
}  // namespace

ModularSeries eisenstein(int k, int order) {
  require_order(order);
  long factor;
  unsigned r;
  switch (k) {
    case 2: factor = -24; r = 1; break;
    case 4: factor = 240; r = 3; break;
    case 6: factor = -504; r = 5; break;
    default: throw UnsupportedWeight("eisenstein weight must be 2, 4 or 6");
  }
  std::vector<Rational> coeffs(static_cast<size_t>(order));
  coeffs[0] = Rational(1);
  for (int n = 1; n < order; ++n)
    coeffs[static_cast<size_t>(n)] =
        Rational(Integer(factor) * sigma(r, static_cast<unsigned>(n)), Integer(1));
  return ModularSeries{QSeries(order, std::move(coeffs)), k, "E" + std::to_string(k)};
}

ModularSeries delta(int order, DeltaMethod method) {
  require_order(order);
  if (method == DeltaMethod::Eisenstein) {
    const QSeries e4 = eisenstein(4, order).series;
    const QSeries e6 = eisenstein(6, order).series;
    const QSeries num = e4 * e4 * e4 - e6 * e6;
    return ModularSeries{num * Rational(1, 1728), 12, "Delta"};
  }
  // q·Π_{n≥1}(1−qⁿ)²⁴; factors with n ≥ order do not touch stored coefficients.
  QSeries prod = QSeries::one(order);
  for (int n = 1; n < order; ++n) {
    QSeries factor = QSeries::one(order);
    QSeries base = QSeries::one(order) - QSeries::from_poly(Poly::monomial(n, Rational(1)), order);
    for (int e = 24; e > 0; e >>= 1) {
      if (e & 1) factor = factor * base;
      base = base * base;
    }
    prod = prod * factor;
  }
  const QSeries q = QSeries::from_poly(Poly::variable(), order);
  return ModularSeries{q * prod, 12, "Delta"};
}

ModularSeries serre_derivative(const ModularSeries& f) {
  const QSeries e2 = eisenstein(2, f.series.order()).series;
  QSeries out = f.series.derive() - e2 * f.series * Rational(f.weight, 12);
  return ModularSeries{std::move(out), f.weight + 2, "serre(" + f.label + ")"};
}

std::vector<CheckReport> ramanujan_check(int order) {
  if (order < 8) throw std::invalid_argument("ramanujan check expects order >= 8");
  const QSeries e2 = eisenstein(2, order).series;
  const QSeries e4 = eisenstein(4, order).series;
  const QSeries e6 = eisenstein(6, order).series;
  const std::string suite = "modular";
  std::vector<CheckReport> reports;
  auto record = [&](const std::string& name, const QSeries& lhs, const QSeries& rhs) {
    const bool ok = lhs == rhs;
    reports.push_back(CheckReport::make(suite, name + "(order=" + std::to_string(order) + ")",
                                        "sec:ramanujan-identities", ok,
                                        ok ? "" : rhs.to_string(), ok ? "" : lhs.to_string()));
  };
  record("E2'=(E2^2-E4)/12", e2.derive(), (e2 * e2 - e4) * Rational(1, 12));
  record("E4'=(E2*E4-E6)/3", e4.derive(), (e2 * e4 - e6) * Rational(1, 3));
  record("E6'=(E2*E6-E4^2)/2", e6.derive(), (e2 * e6 - e4 * e4) * Rational(1, 2));
  return reports;
}

std::vector<CheckReport> chazy_check(int order) {
  if (order < 8) throw std::invalid_argument("chazy check expects order >= 8");
  const QSeries e2 = eisenstein(2, order).series;
  const QSeries e4 = eisenstein(4, order).series;
  const QSeries e6 = eisenstein(6, order).series;
  const std::string suite = "chazy";
  const std::string tag = "(order=" + std::to_string(order) + ")";
  std::vector<CheckReport> reports;
  auto record = [&](const std::string& name, const std::string& anchor, const QSeries& lhs,
                    const QSeries& rhs) {
    const bool ok = lhs == rhs;
    reports.push_back(CheckReport::make(suite, name + tag, anchor, ok,
                                        ok ? "" : rhs.to_string(), ok ? "" : lhs.to_string()));
  };

  // Scalar form for u = E2.
  const QSeries u1 = e2.derive(), u2 = u1.derive(), u3 = u2.derive();
  record("2u'''-2uu''+3(u')^2=0", "eq:4.2",
         u3 * Rational(2) - e2 * u2 * Rational(2) + u1 * u1 * Rational(3), QSeries(order));

  // Covariant form: A = E2/6 at eccentricity 1, F = DA − A²/2,
  // and ∇ on a weight-k series is ψ ↦ Dψ − (k/2)Aψ.
  const QSeries a = e2 * Rational(1, 6);
  const QSeries f = a.derive() - a * a * Rational(1, 2);
  record("F_A=-E4/72", "lem:chazy", f, e4 * Rational(-1, 72));
  const QSeries nf = f.derive() - a * f * Rational(2);  // weight 4
  record("grad(F_A)=E6/216", "lem:chazy", nf, e6 * Rational(1, 216));
  const QSeries nnf = nf.derive() - a * nf * Rational(3);  // weight 6
  record("grad^2(F_A)=-E4^2/432", "lem:chazy", nnf, e4 * e4 * Rational(-1, 432));
  record("grad^2(F_A)+12F_A^2=0", "lem:chazy", nnf + f * f * Rational(12), QSeries(order));
  return reports;
}

std::vector<CheckReport> wronskian_connection_check(int order) {
  require_order(order);
  const QSeries e4 = eisenstein(4, order).series;
  const QSeries e6 = eisenstein(6, order).series;
  const std::string suite = "modular";
  std::vector<CheckReport> reports;

  const QSeries wr = e4 * e6.derive() - e6 * e4.derive();
  const int v = wr.valuation();
  reports.push_back(CheckReport::make(suite, "wronskian(E4,E6)-vanishes-at-q0",
                                      "sec:modular-curvature", v >= 1, ">= 1",
                                      std::to_string(v)));

  // A = (2/10)·DW/W; the valuation-aware logarithmic derivative keeps the
  // arithmetic exact at order N − v.
  const QSeries logd = wr.log_derivative();
  const QSeries a = logd * Rational(1, 5);

  // Consistency of the division: (5A)·W₁ = v·W₁ + D(W₁) for W = q^v·W₁.
  QSeries unit(order - v);
  {
    std::vector<Rational> shifted(static_cast<size_t>(order - v));
    for (int i = 0; i < order - v; ++i) shifted[static_cast<size_t>(i)] = wr.coeff(i + v);
    unit = QSeries(order - v, std::move(shifted));
  }
  const QSeries lhs = a * Rational(5) * unit;
  const QSeries rhs = unit * Rational(v) + unit.derive();
  reports.push_back(CheckReport::make(suite, "maurer-cartan-log-derivative-exact",
                                      "sec:modular-curvature", lhs == rhs,
                                      rhs.to_string(), lhs.to_string()));

  const QSeries curv = a.derive() - a * a * Rational(1, 2);
  const ModularSeries tagged{curv, 4, "F_A(Wr(E4,E6))"};
  reports.push_back(CheckReport::make(suite, "wronskian-curvature-weight-4",
                                      "sec:modular-curvature", tagged.weight == 4, "4",
                                      std::to_string(tagged.weight)));
  return reports;
}

}  // namespace schwarzian

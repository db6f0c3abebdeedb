#include "schwarzian/calculus.hpp"

#include <stdexcept>

namespace schwarzian {

CoeffPair::CoeffPair(RatMat a, RatMat qq) : A(std::move(a)), q(std::move(qq)) {
  if (A.dim() != q.dim()) throw std::invalid_argument("coefficient pair dimensions differ");
}

CoordMap::CoordMap(RatFunc lambda) : lambda_(std::move(lambda)) {
  if (lambda_.is_constant()) throw ConstantInput("coordinate change must be nonconstant");
  prime_ = lambda_.derivative();
  second_ = prime_.derivative();
  inhom_ = second_ / prime_;
  schwarzian_ = inhom_.derivative() - Rational(1, 2) * inhom_ * inhom_;
}

RatFunc scalar_schwarzian(const RatFunc& f) {
  if (f.is_constant()) throw ConstantInput("Schwarzian of a constant");
  const RatFunc fp = f.derivative();
  const RatFunc u = fp.derivative() / fp;
  return u.derivative() - Rational(1, 2) * u * u;
}

bool schwarzian_chain_rule_holds(const RatFunc& f, const CoordMap& map) {
  const RatFunc lhs = scalar_schwarzian(f.compose(map.lambda()));
  const RatFunc rhs =
      map.prime() * map.prime() * scalar_schwarzian(f).compose(map.lambda()) + map.schwarzian();
  return lhs == rhs;
}

RatMat curvature(const Connection& c) {
  if (c.e.is_zero()) throw ZeroEccentricity("curvature requires nonzero eccentricity");
  const Rational half_inv = Rational(1) / (Rational(2) * c.e);
  return c.A.derivative() - (c.A * c.A) * half_inv;
}

RatMat transport_connection(const Connection& c, const CoordMap& map) {
  const int n = c.A.dim();
  return map.prime() * map.pullback(c.A) + RatMat::scalar(n, RatFunc(c.e) * map.inhomogeneity());
}

bool curvature_anomaly_holds(const Connection& c, const CoordMap& map) {
  const int n = c.A.dim();
  const RatMat lhs = curvature(Connection(transport_connection(c, map), c.e));
  const RatMat rhs = map.prime() * map.prime() * map.pullback(curvature(c)) +
                     RatMat::scalar(n, RatFunc(c.e) * map.schwarzian());
  return lhs == rhs;
}

RatMat covariant_derivative(const Connection& c, const RatMat& psi, long m) {
  if (c.e.is_zero()) throw ZeroEccentricity("covariant derivative requires nonzero eccentricity");
  return psi.derivative() - (Rational(m) / c.e) * (c.A * psi);
}

RatMat matrix_schwarzian(const CoeffPair& pair) {
  return Rational(2) * (pair.A.derivative() - pair.A * pair.A - pair.q);
}

RatFunc projective_curvature(const ScalarODE& ode) {
  return Rational(2) * (ode.p.derivative() - ode.p * ode.p - ode.q);
}

namespace {
RatMat checked_gauge_inverse(const RatMat& g) {
  try {
    return g.inverse();
  } catch (const SingularMatrix&) {
    throw SingularGauge("gauge matrix has identically zero determinant");
  }
}
}  // namespace

Connection gauge_act(const RatMat& g, const Connection& c) {
  const RatMat ginv = checked_gauge_inverse(g);
  return Connection(g * c.A * ginv + g.derivative() * ginv, c.e);
}

CoeffPair gauge_transform(const RatMat& g, const CoeffPair& pair) {
  const RatMat ginv = checked_gauge_inverse(g);
  const RatMat gp = g.derivative();
  const RatMat gpp = gp.derivative();
  return CoeffPair(ginv * pair.A * g - ginv * gp,
                   ginv * pair.q * g + Rational(2) * (ginv * pair.A * gp) - ginv * gpp);
}

CoeffPair star_act(const RatMat& u, const CoeffPair& pair) {
  if (u.dim() != pair.A.dim()) throw std::invalid_argument("dimension mismatch in star action");
  return CoeffPair(pair.A + u,
                   pair.q - u * pair.A - pair.A * u - u * u + u.derivative());
}

bool gauge_star_compatible(const RatMat& u, const RatMat& g, const CoeffPair& pair) {
  const RatMat ginv = checked_gauge_inverse(g);
  const CoeffPair lhs = gauge_transform(g, star_act(u, pair));
  const CoeffPair rhs = star_act(ginv * u * g, gauge_transform(g, pair));
  return lhs == rhs;
}

bool solution_gauge_conjugation_holds(const RatMat& g, const Connection& c) {
  if (!(c.e == Rational(1, 2)))
    throw std::invalid_argument("the conjugation law is stated at eccentricity 1/2");
  const RatMat ginv = checked_gauge_inverse(g);
  const RatMat gp = g.derivative();
  const RatMat q = (gp.derivative() - Rational(2) * (c.A * gp)) * ginv;
  const RatMat lhs = curvature(gauge_act(ginv, c));
  const RatMat rhs = ginv * (curvature(c) - q) * g;
  return lhs == rhs;
}

std::vector<RatFunc> characteristic_invariants(const RatMat& b, int rmax) {
  if (rmax < 1) throw std::invalid_argument("rmax must be at least 1");
  std::vector<RatFunc> traces;
  traces.reserve(static_cast<size_t>(rmax));
  RatMat p = b;
  for (int r = 1; r <= rmax; ++r) {
    traces.push_back(p.trace());
    if (r < rmax) p = p * b;
  }
  return traces;
}

RatFunc wronskian(const std::vector<RatFunc>& fs) {
  const int n = static_cast<int>(fs.size());
  if (n < 1) throw std::invalid_argument("wronskian of an empty tuple");
  RatMat w(n);
  for (int i = 0; i < n; ++i) {
    RatFunc d = fs[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j) {
      w.at(i, j) = d;
      d = d.derivative();
    }
  }
  return w.det();
}

Connection maurer_cartan(const RatMat& psi, const Rational& m) {
  if (m.is_zero()) throw ZeroWeight("logarithmic derivative needs a nonzero weight");
  RatMat inv(psi.dim());
  try {
    inv = psi.inverse();
  } catch (const SingularMatrix&) {
    throw SingularInput("input has identically zero determinant");
  }
  return Connection(m.inverse() * (inv * psi.derivative()), Rational(1));
}

ScalarODE coordinate_change(const ScalarODE& ode, const CoordMap& map) {
  return ScalarODE{map.pullback(ode.p) * map.prime() + Rational(1, 2) * map.inhomogeneity(),
                   map.pullback(ode.q) * map.prime() * map.prime()};
}

CoeffPair coordinate_change(const CoeffPair& pair, const CoordMap& map, const RatMat& frame) {
  if (!frame.is_constant())
    throw std::invalid_argument("frame change must be a constant matrix");
  RatMat frame_inv(frame.dim());
  try {
    frame_inv = frame.inverse();
  } catch (const SingularMatrix&) {
    throw SingularFrameChange("frame change must be invertible");
  }
  const int n = pair.A.dim();
  const RatMat a_new =
      frame *
      (map.prime() * map.pullback(pair.A) + RatMat::scalar(n, Rational(1, 2) * map.inhomogeneity())) *
      frame_inv;
  const RatMat q_new = map.prime() * map.prime() * (frame * map.pullback(pair.q) * frame_inv);
  return CoeffPair(a_new, q_new);
}

ScalarODE eliminate_to_scalar(const RatMat& m) {
  if (m.dim() != 2) throw std::invalid_argument("elimination expects a 2x2 system");
  const RatFunc& a = m.at(0, 0);
  const RatFunc& b = m.at(0, 1);
  const RatFunc& c = m.at(1, 0);
  const RatFunc& d = m.at(1, 1);
  if (b.is_zero()) throw DegenerateCoupling("first equation does not couple to the second row");
  // From y′ = ay + bz, z′ = cy + dz:
  //   y″ = (a + d + b′/b)·y′ + (a′ − a·b′/b + bc − ad)·y.
  const RatFunc blog = b.derivative() / b;
  const RatFunc big_p = a + d + blog;
  const RatFunc big_q = a.derivative() - a * blog + b * c - a * d;
  return ScalarODE{Rational(1, 2) * big_p, big_q};
}

}  // namespace schwarzian

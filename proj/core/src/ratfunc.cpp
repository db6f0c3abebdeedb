#include "schwarzian/ratfunc.hpp"

namespace schwarzian {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  const Rational lead = den_.leading();
  if (!(lead == Rational(1))) {
    const Rational inv = lead.inverse();
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational RatFunc::constant_value() const {
  return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

// Reduced sum of reduced fractions without a full-size gcd: with
// g = gcd(d1, d2) and t = n1·(d2/g) + n2·(d1/g), the only common factor left
// between t and the joint denominator divides g.
RatFunc RatFunc::reduced_sum(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2) {
  const Poly g = Poly::gcd(d1, d2);
  if (g.degree() == 0) return from_reduced(n1 * d2 + n2 * d1, d1 * d2);
  const Poly d2g = d2 / g;
  const Poly t = n1 * d2g + n2 * (d1 / g);
  const Poly g2 = Poly::gcd(t, g);
  if (g2.degree() == 0) return from_reduced(t, d1 * d2g);
  return from_reduced(t / g2, (d1 / g2) * d2g);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return RatFunc::reduced_sum(a.num_, a.den_, b.num_, b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return -b;
  if (b.is_zero()) return a;
  return RatFunc::reduced_sum(a.num_, a.den_, -b.num_, b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(0);
  // Cross-reduction leaves the product already in lowest terms.
  const Poly g1 = Poly::gcd(a.num_, b.den_);
  const Poly g2 = Poly::gcd(b.num_, a.den_);
  const Poly n1 = g1.degree() > 0 ? a.num_ / g1 : a.num_;
  const Poly d2 = g1.degree() > 0 ? b.den_ / g1 : b.den_;
  const Poly n2 = g2.degree() > 0 ? b.num_ / g2 : b.num_;
  const Poly d1 = g2.degree() > 0 ? a.den_ / g2 : a.den_;
  return RatFunc::from_reduced(n1 * n2, d1 * d2);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::from_reduced(Poly num, Poly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.num_.is_zero()) {
    r.den_ = Poly(Rational(1));
    return r;
  }
  const Rational lead = r.den_.leading();
  if (!(lead == Rational(1))) {
    const Rational inv = lead.inverse();
    r.num_ = r.num_ * inv;
    r.den_ = r.den_ * inv;
  }
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RatFunc::from_reduced(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r(1), b = *this;
  for (; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

RatFunc RatFunc::derivative() const {
  if (den_.is_constant()) return RatFunc(num_.derivative());
  // Quotient rule with the repeated part of the denominator split off:
  // for g = gcd(d, d′) and u = d/g, (n/d)′ = (n′u − n·(d′/g)) / (d·u).
  const Poly dp = den_.derivative();
  const Poly g = Poly::gcd(den_, dp);
  const Poly u = g.degree() > 0 ? den_ / g : den_;
  const Poly w = g.degree() > 0 ? dp / g : dp;
  return RatFunc(num_.derivative() * u - num_ * w, den_ * u);
}

RatFunc RatFunc::compose(const RatFunc& inner) const {
  if (inner.is_constant()) {
    const Rational c = inner.constant_value();
    if (den_.eval(c).is_zero()) throw PoleAtConstant("composition hits a pole");
    return RatFunc(num_.eval(c) / den_.eval(c));
  }
  // Horner in the rational function field for both numerator and denominator.
  auto substitute = [&inner](const Poly& p) {
    RatFunc acc(0);
    for (int i = p.degree(); i >= 0; --i) acc = acc * inner + RatFunc(p.coeff(i));
    return acc;
  };
  return substitute(num_) / substitute(den_);
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero("evaluation at a pole");
  return num_.eval(x) / d;
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::string RatFunc::to_string(const std::string& var) const {
  if (den_ == Poly(Rational(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace schwarzian

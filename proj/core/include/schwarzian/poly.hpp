#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "schwarzian/rational.hpp"

namespace schwarzian {

/// Dense univariate polynomial over Q. Coefficients are stored by ascending
/// degree; the zero polynomial has an empty coefficient vector, otherwise the
/// leading coefficient is nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
  }
  explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

  // The monomial t.
  static Poly variable() { return monomial(1, Rational(1)); }
  static Poly monomial(int degree, const Rational& coeff);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rational& s) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;
  // Substitutes another polynomial for the variable.
  Poly compose(const Poly& inner) const;

  // Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const;

  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  // Number of distinct real roots in the closed interval [lo, hi]
  // (Sturm chain on the square-free part).
  int count_real_roots_in(const Rational& lo, const Rational& hi) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

}  // namespace schwarzian

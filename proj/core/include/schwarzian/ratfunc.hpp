#pragma once

#include <string>

#include "schwarzian/poly.hpp"

namespace schwarzian {

/// Reduced rational function num/den over Q. Canonical form: den monic,
/// gcd(num, den) = 1, zero is 0/1. Equality is structural equality of the
/// canonical form, so identities between formulas are decidable.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                   // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}      // NOLINT
  RatFunc(Poly num, Poly den);

  static RatFunc variable() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  // Quotient rule, reduced.
  RatFunc derivative() const;

  // Exact substitution (*this) ∘ inner. Throws PoleAtConstant when inner is a
  // constant at which this function has a pole.
  RatFunc compose(const RatFunc& inner) const;

  Rational eval(const Rational& x) const;  // throws DivisionByZero at a pole
  double eval(double x) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  // Skips the gcd when the operands are known to be in lowest terms already.
  static RatFunc from_reduced(Poly num, Poly den);
  static RatFunc reduced_sum(const Poly& n1, const Poly& d1, const Poly& n2, const Poly& d2);
  void normalize();
  Poly num_, den_;
};

inline RatFunc operator*(const Rational& s, const RatFunc& f) { return RatFunc(s) * f; }
inline RatFunc operator*(const RatFunc& f, const Rational& s) { return f * RatFunc(s); }

}  // namespace schwarzian

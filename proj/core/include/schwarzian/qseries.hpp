#pragma once

#include <string>
#include <vector>

#include "schwarzian/poly.hpp"

namespace schwarzian {

/// Truncated formal power series in q with exact rational coefficients and an
/// explicit truncation order N (coefficients of q^0 .. q^{N-1} are stored).
/// Binary operations carry order = min of the operand orders. The exposed
/// derivation is D = q·d/dq, which preserves the truncation order.
class QSeries {
 public:
  explicit QSeries(int order) : c_(checked(order)) {}
  QSeries(int order, std::vector<Rational> coeffs);

  static QSeries constant(const Rational& value, int order);
  static QSeries one(int order) { return constant(Rational(1), order); }
  // Truncation of a polynomial in q.
  static QSeries from_poly(const Poly& p, int order);

  int order() const { return static_cast<int>(c_.size()); }
  Rational coeff(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  // Index of the first nonzero coefficient; equals order() for the zero series.
  int valuation() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries operator*(const Rational& s) const;

  friend bool operator==(const QSeries& a, const QSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }
  // Coefficientwise agreement through q^{upto-1}.
  static bool agree(const QSeries& a, const QSeries& b, int upto);

  // Multiplicative inverse; requires a nonzero constant term.
  QSeries invert() const;
  // exp of a series with zero constant term.
  QSeries exp() const;
  // D = q·d/dq; no order loss.
  QSeries derive() const;
  // D(x)/x for x ≠ 0, with the valuation v split off: x = q^v·u gives
  // v + D(u)/u at order N − v.
  QSeries log_derivative() const;

  QSeries truncate(int order) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  static int checked(int order);
  std::vector<Rational> c_;
};

inline QSeries operator*(const Rational& s, const QSeries& x) { return x * s; }

}  // namespace schwarzian

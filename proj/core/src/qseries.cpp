#include "schwarzian/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "schwarzian/errors.hpp"

namespace schwarzian {

int QSeries::checked(int order) {
  if (order < 1) throw std::invalid_argument("series order must be positive");
  return order;
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  checked(order);
  c_.resize(static_cast<size_t>(order), Rational(0));
}

QSeries QSeries::constant(const Rational& value, int order) {
  QSeries s(order);
  s.c_[0] = value;
  return s;
}

QSeries QSeries::from_poly(const Poly& p, int order) {
  QSeries s(order);
  for (int i = 0; i < order && i <= p.degree(); ++i) s.c_[static_cast<size_t>(i)] = p.coeff(i);
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c.is_zero(); });
}

int QSeries::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return order();
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i < r.order(); ++i) r.c_[static_cast<size_t>(i)] = a.coeff(i) + b.coeff(i);
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  // Integer convolution with one shared denominator per operand.
  Integer da = 1, db = 1;
  for (int i = 0; i < n; ++i) {
    mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), a.c_[static_cast<size_t>(i)].denominator().get_mpz_t());
    mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), b.c_[static_cast<size_t>(i)].denominator().get_mpz_t());
  }
  std::vector<Integer> ia(static_cast<size_t>(n)), ib(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rational& ca = a.c_[static_cast<size_t>(i)];
    const Rational& cb = b.c_[static_cast<size_t>(i)];
    ia[static_cast<size_t>(i)] = ca.numerator() * (da / ca.denominator());
    ib[static_cast<size_t>(i)] = cb.numerator() * (db / cb.denominator());
  }
  std::vector<Integer> conv(static_cast<size_t>(n), Integer(0));
  for (int i = 0; i < n; ++i) {
    if (ia[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j < n; ++j)
      mpz_addmul(conv[static_cast<size_t>(i + j)].get_mpz_t(), ia[static_cast<size_t>(i)].get_mpz_t(),
                 ib[static_cast<size_t>(j)].get_mpz_t());
  }
  const Integer den = da * db;
  QSeries r(n);
  for (int i = 0; i < n; ++i) r.c_[static_cast<size_t>(i)] = Rational(conv[static_cast<size_t>(i)], den);
  return r;
}

QSeries QSeries::operator*(const Rational& s) const {
  QSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool QSeries::agree(const QSeries& a, const QSeries& b, int upto) {
  if (upto > a.order() || upto > b.order())
    throw std::invalid_argument("comparison order exceeds truncation order");
  for (int i = 0; i < upto; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

QSeries QSeries::invert() const {
  if (c_[0].is_zero()) throw NonUnitSeries("inverse of a series without unit constant term");
  QSeries r(order());
  const Rational lead_inv = c_[0].inverse();
  r.c_[0] = lead_inv;
  for (int n = 1; n < order(); ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += c_[static_cast<size_t>(k)] * r.c_[static_cast<size_t>(n - k)];
    r.c_[static_cast<size_t>(n)] = -lead_inv * acc;
  }
  return r;
}

QSeries QSeries::exp() const {
  if (!c_[0].is_zero())
    throw NonNilpotentExponent("exp of a series with nonzero constant term");
  // From y' = x'y: n·y_n = Σ_{k=1..n} k·x_k·y_{n-k}.
  QSeries r(order());
  r.c_[0] = Rational(1);
  for (int n = 1; n < order(); ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k)
      acc += Rational(k) * c_[static_cast<size_t>(k)] * r.c_[static_cast<size_t>(n - k)];
    r.c_[static_cast<size_t>(n)] = acc / Rational(n);
  }
  return r;
}

QSeries QSeries::derive() const {
  QSeries r(order());
  for (int n = 0; n < order(); ++n) r.c_[static_cast<size_t>(n)] = Rational(n) * c_[static_cast<size_t>(n)];
  return r;
}

QSeries QSeries::log_derivative() const {
  const int v = valuation();
  if (v == order()) throw DivisionByZero("logarithmic derivative of the zero series");
  QSeries unit(order() - v);
  for (int i = 0; i < unit.order(); ++i) unit.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i + v)];
  return QSeries::constant(Rational(v), unit.order()) + unit.derive() * unit.invert();
}

QSeries QSeries::truncate(int order) const {
  checked(order);
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  QSeries r(order);
  std::copy(c_.begin(), c_.begin() + order, r.c_.begin());
  return r;
}

std::string QSeries::to_string(const std::string& var) const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < order(); ++i) {
    const Rational& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        out << "-";
        a = -a;
      }
      first = false;
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    if (i == 0) {
      out << a.to_string();
    } else {
      if (!(a == Rational(1))) out << a.to_string() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  out << " + O(" << var << "^" << order() << ")";
  return out.str();
}

}  // namespace schwarzian

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "schwarzian/ratfunc.hpp"

namespace schwarzian {

/// Square matrix with RatFunc entries.
class RatMat {
 public:
  explicit RatMat(int n);
  RatMat(std::initializer_list<std::initializer_list<RatFunc>> rows);

  static RatMat identity(int n);
  static RatMat diagonal(const std::vector<RatFunc>& d);
  static RatMat scalar(int n, const RatFunc& f) { return identity(n) * f; }

  int dim() const { return n_; }
  RatFunc& at(int i, int j) { return e_[static_cast<size_t>(i * n_ + j)]; }
  const RatFunc& at(int i, int j) const { return e_[static_cast<size_t>(i * n_ + j)]; }

  bool is_zero() const;
  bool is_constant() const;

  RatMat operator-() const;
  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  RatMat operator*(const RatFunc& s) const;
  RatMat operator*(const Rational& s) const { return *this * RatFunc(s); }

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

  RatMat derivative() const;
  RatFunc trace() const;
  RatFunc det() const;
  // Exact inverse; throws SingularMatrix when det ≡ 0.
  RatMat inverse() const;
  RatMat pow(int k) const;
  // Coefficients of det(λI − X) by ascending power of λ (leading entry 1).
  std::vector<RatFunc> charpoly() const;
  // Entrywise substitution t ↦ inner(t).
  RatMat compose(const RatFunc& inner) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  int n_;
  std::vector<RatFunc> e_;
};

inline RatMat operator*(const RatFunc& s, const RatMat& m) { return m * s; }
inline RatMat operator*(const Rational& s, const RatMat& m) { return m * RatFunc(s); }

}  // namespace schwarzian
